#include "orbicurve/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "orbicurve/errors.hpp"

namespace orbicurve {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

std::size_t letter_length(const Word& w) {
  std::size_t n = 0;
  for (const Letter& l : w) n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return n;
}

FinitePresentation::FinitePresentation(std::vector<std::string> generators,
                                       std::vector<Word> relators)
    : generators_(std::move(generators)) {
  relators_.reserve(relators.size());
  for (Word& r : relators) {
    check_word(r);
    relators_.push_back(free_reduce(std::move(r)));
  }
}

std::optional<std::size_t> FinitePresentation::find_generator(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

void FinitePresentation::check_word(const Word& w) const {
  for (const Letter& l : w) {
    if (l.generator >= generators_.size()) {
      throw UnknownGenerator("generator index " + std::to_string(l.generator) +
                             " out of range for " + std::to_string(generators_.size()) +
                             " generators");
    }
  }
}

namespace {

long parse_long(std::string_view s, std::string_view context) {
  long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("bad exponent in token '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Word FinitePresentation::parse_word(std::string_view text) const {
  Word w;
  for (std::string_view tok : split_ws(text)) {
    std::string_view name = tok;
    long e = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      e = parse_long(tok.substr(caret + 1), tok);
    }
    auto g = find_generator(name);
    if (!g) throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
    w.push_back({*g, e});
  }
  return free_reduce(std::move(w));
}

std::string FinitePresentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << generators_.at(w[i].generator);
    if (w[i].exponent != 1) os << '^' << w[i].exponent;
  }
  return os.str();
}

PresentationFile parse_presentation_text(std::string_view text) {
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<std::string> rel_lines;
  std::vector<std::string> sub_lines;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    std::string_view head = toks.front();
    std::string rest(line.substr(line.find(head) + head.size()));
    if (head == "gens") {
      if (have_gens) throw ParseError("line " + std::to_string(lineno) + ": duplicate gens line");
      have_gens = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::string name(toks[i]);
        if (name.find('^') != std::string::npos) {
          throw ParseError("line " + std::to_string(lineno) + ": bad generator name '" + name + "'");
        }
        if (std::find(gens.begin(), gens.end(), name) != gens.end()) {
          throw ParseError("line " + std::to_string(lineno) + ": duplicate generator '" + name + "'");
        }
        gens.push_back(std::move(name));
      }
    } else if (head == "rel") {
      rel_lines.push_back(std::move(rest));
    } else if (head == "sub") {
      sub_lines.push_back(std::move(rest));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" +
                       std::string(head) + "'");
    }
  }
  if (!have_gens) throw ParseError("missing gens line");

  FinitePresentation names_only(gens, {});
  std::vector<Word> rels;
  for (const auto& l : rel_lines) rels.push_back(names_only.parse_word(l));
  std::vector<Word> subs;
  for (const auto& l : sub_lines) subs.push_back(names_only.parse_word(l));
  return {FinitePresentation(std::move(gens), std::move(rels)), std::move(subs)};
}

}  // namespace orbicurve
