#include "orbicurve/cosets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "orbicurve/errors.hpp"

namespace orbicurve {

namespace {

constexpr std::int32_t kUndefined = -1;

struct ExceededSignal {};

// Each word is expanded to a sequence of table columns.
std::vector<std::size_t> expand(const Word& w) {
  std::vector<std::size_t> cols;
  for (const Letter& l : w) {
    const std::size_t col = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
    const long n = l.exponent < 0 ? -l.exponent : l.exponent;
    cols.insert(cols.end(), static_cast<std::size_t>(n), col);
  }
  return cols;
}

class Enumerator {
 public:
  Enumerator(const FinitePresentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generator_count()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators()) {
      auto cols = expand(r);
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    add_row();
    live_ = 1;
  }

  std::optional<CosetTable> run(const std::vector<Word>& subgroup) {
    try {
      for (const Word& w : subgroup) {
        auto cols = expand(w);
        if (!cols.empty()) scan_and_fill(0, cols);
      }
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (dead_count() > live_ && dead_count() > 1024) c = compact(c);
        for (const auto& rel : relators_) {
          if (!alive(c)) break;
          scan_and_fill(c, rel);
        }
        for (std::size_t x = 0; x < ncols_; ++x) {
          if (!alive(c)) break;
          if (entry(c, x) == kUndefined) define(c, x);
        }
      }
    } catch (const ExceededSignal&) {
      return std::nullopt;
    }
    compact(parent_.size());
    CosetTable t;
    t.generator_count = ncols_ / 2;
    t.cosets = parent_.size();
    t.action.reserve(table_.size());
    for (std::int32_t v : table_) t.action.push_back(static_cast<std::uint32_t>(v));
    t.complete = true;
    return t;
  }

 private:
  std::size_t dead_count() const { return parent_.size() - live_; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  void add_row() {
    table_.insert(table_.end(), ncols_, kUndefined);
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
  }

  void define(std::size_t c, std::size_t x) {
    if (live_ >= max_cosets_) throw ExceededSignal{};
    const std::size_t d = parent_.size();
    add_row();
    ++live_;
    entry(c, x) = static_cast<std::int32_t>(d);
    entry(d, inv(x)) = static_cast<std::int32_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != static_cast<std::int32_t>(root)) root = static_cast<std::size_t>(parent_[root]);
    while (parent_[c] != static_cast<std::int32_t>(root)) {
      const std::size_t next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<std::int32_t>(root);
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    parent_[hi] = static_cast<std::int32_t>(lo);
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::size_t gamma = queue_[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t target = entry(gamma, x);
        if (target == kUndefined) continue;
        const std::size_t delta = static_cast<std::size_t>(target);
        entry(delta, inv(x)) = kUndefined;
        const std::size_t mu = rep(gamma);
        const std::size_t nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)));
        } else if (entry(nu, inv(x)) != kUndefined) {
          merge(mu, static_cast<std::size_t>(entry(nu, inv(x))));
        } else {
          entry(mu, x) = static_cast<std::int32_t>(nu);
          entry(nu, inv(x)) = static_cast<std::int32_t>(mu);
        }
      }
    }
    queue_.clear();
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned position
    for (;;) {
      while (i < j && entry(f, w[i]) != kUndefined) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inv(w[j - 1])) != kUndefined) {
        b = static_cast<std::size_t>(entry(b, inv(w[j - 1])));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<std::int32_t>(b);
        entry(b, inv(w[i])) = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  // Renumbers live cosets in order; returns the new index of the first live
  // coset at or after `pos`.
  std::size_t compact(std::size_t pos) {
    std::vector<std::int32_t> renum(parent_.size(), kUndefined);
    std::size_t next = 0;
    std::size_t new_pos = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (c == pos) new_pos = next;
      if (alive(c)) renum[c] = static_cast<std::int32_t>(next++);
    }
    if (pos >= parent_.size()) new_pos = next;
    std::vector<std::int32_t> table;
    table.reserve(next * ncols_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t v = entry(c, x);
        table.push_back(v == kUndefined ? kUndefined : renum[static_cast<std::size_t>(v)]);
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    std::iota(parent_.begin(), parent_.end(), 0);
    return new_pos;
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::size_t> queue_;
  std::size_t live_ = 0;
};

}  // namespace

std::optional<CosetTable> coset_enumeration(const FinitePresentation& p,
                                            const std::vector<Word>& subgroup,
                                            std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  for (const Word& w : subgroup) p.check_word(w);
  return Enumerator(p, max_cosets).run(subgroup);
}

std::optional<std::uint64_t> group_order(const FinitePresentation& p, std::size_t bound) {
  auto t = coset_enumeration(p, {}, bound);
  if (!t) return std::nullopt;
  return t->cosets;
}

bool table_is_closed(const CosetTable& t, const FinitePresentation& p) {
  if (!t.complete || t.generator_count != p.generator_count()) return false;
  if (t.action.size() != t.cosets * t.columns()) return false;
  for (std::size_t c = 0; c < t.cosets; ++c) {
    for (std::size_t g = 0; g < t.generator_count; ++g) {
      const std::uint32_t fwd = t.image(c, g);
      if (fwd >= t.cosets || t.image(fwd, g, true) != c) return false;
    }
  }
  for (const Word& r : p.relators()) {
    for (std::size_t c = 0; c < t.cosets; ++c) {
      std::size_t cur = c;
      for (const Letter& l : r) {
        const bool neg = l.exponent < 0;
        const long n = neg ? -l.exponent : l.exponent;
        for (long k = 0; k < n; ++k) cur = t.image(cur, l.generator, neg);
      }
      if (cur != c) return false;
    }
  }
  return true;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::uint64_t permutation_order(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool is_bijection(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

void PermutationImages::validate() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != degree) {
      throw InvalidPermutation("image " + std::to_string(i + 1) + " has size " +
                               std::to_string(images[i].size()) + ", expected degree " +
                               std::to_string(degree));
    }
    if (!is_bijection(images[i])) {
      throw InvalidPermutation("image " + std::to_string(i + 1) + " is not a bijection");
    }
  }
}

PermutationImages generator_permutations(const CosetTable& t) {
  if (!t.complete) throw IncompleteTable("coset table is incomplete");
  PermutationImages out;
  out.degree = t.cosets;
  for (std::size_t g = 0; g < t.generator_count; ++g) {
    Permutation p(t.cosets);
    for (std::size_t c = 0; c < t.cosets; ++c) p[c] = t.image(c, g);
    out.images.push_back(std::move(p));
  }
  return out;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint32_t v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

std::optional<std::uint64_t> permutation_group_order(const PermutationImages& perms, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  perms.validate();
  std::unordered_set<Permutation, PermHash> seen;
  std::deque<Permutation> frontier;
  Permutation id = identity_permutation(perms.degree);
  seen.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : perms.images) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

Permutation evaluate_word(const PermutationImages& perms, const Word& w) {
  Permutation acc = identity_permutation(perms.degree);
  for (const Letter& l : w) {
    if (l.generator >= perms.images.size()) {
      throw ArityMismatch("word uses generator " + std::to_string(l.generator + 1) + " but only " +
                          std::to_string(perms.images.size()) + " images were given");
    }
    const Permutation& g = perms.images[l.generator];
    const Permutation step = l.exponent < 0 ? invert(g) : g;
    const long n = l.exponent < 0 ? -l.exponent : l.exponent;
    for (long k = 0; k < n; ++k) acc = compose(acc, step);
  }
  return acc;
}

bool verify_homomorphism(const FinitePresentation& p, const PermutationImages& images) {
  if (images.images.size() != p.generator_count()) {
    throw ArityMismatch("expected " + std::to_string(p.generator_count()) + " images, got " +
                        std::to_string(images.images.size()));
  }
  images.validate();
  const Permutation id = identity_permutation(images.degree);
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return evaluate_word(images, r) == id; });
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      unsigned long point = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), point);
      if (ec != std::errc() || ptr == text.data() + i) {
        throw ParseError("bad point in cycle notation: '" + std::string(text) + "'");
      }
      i = static_cast<std::size_t>(ptr - text.data());
      if (point < 1 || point > degree) {
        throw ParseError("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) throw ParseError("point " + std::to_string(point) + " repeated in cycles");
      used[point - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) os << ' ';
      os << j + 1;
      seen[j] = true;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

PermutationImages parse_permutation_file(std::string_view text, const FinitePresentation& p) {
  std::vector<std::optional<std::string>> cycles(p.generator_count());
  std::size_t degree = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); })) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'name = cycles'");
    std::string name = line.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    auto g = p.find_generator(name);
    if (!g) throw UnknownGenerator("line " + std::to_string(lineno) + ": unknown generator '" + name + "'");
    if (cycles[*g]) throw ParseError("line " + std::to_string(lineno) + ": duplicate image for '" + name + "'");
    std::string body = line.substr(eq + 1);
    for (std::size_t k = 0; k < body.size();) {
      if (std::isdigit(static_cast<unsigned char>(body[k]))) {
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(body.data() + k, body.data() + body.size(), v);
        if (ec == std::errc()) degree = std::max<std::size_t>(degree, v);
        k = static_cast<std::size_t>(ptr - body.data());
      } else {
        ++k;
      }
    }
    cycles[*g] = std::move(body);
  }
  PermutationImages out;
  out.degree = degree;
  for (std::size_t g = 0; g < cycles.size(); ++g) {
    if (!cycles[g]) {
      throw ArityMismatch("no image given for generator '" + p.generators()[g] + "'");
    }
    out.images.push_back(parse_cycles(*cycles[g], degree));
  }
  return out;
}

}  // namespace orbicurve
