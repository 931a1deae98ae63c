#include "orbicurve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "orbicurve/errors.hpp"
#include "orbicurve/json_io.hpp"

namespace orbicurve::cli {

namespace {

struct Outcome {
  Json body;
  int code = kExitOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("ORBICURVE_MAX_COSETS")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("ORBICURVE_MAX_COSETS is not a positive integer: ") + env);
  }
  return kDefaultMaxCosets;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw MalformedSignature("bad integer list '" + text + "'");
    }
  }
  return out;
}

void print_text(std::ostream& out, const Json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_text(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const Json& item : value) {
        if (item.contains("name") && item.contains("pass")) {
          out << indent << "  [" << (item["pass"].get<bool>() ? "pass" : "FAIL") << "] "
              << item["name"].get<std::string>() << "  " << item.value("detail", "") << '\n';
        } else {
          out << indent << "  " << item.dump() << '\n';
        }
      }
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve orbifold group toolkit", "orbicurve"};
  app.require_subcommand(1, 1);
  bool text_mode = false;
  app.add_flag("--text", text_mode, "Human-readable output instead of JSON");

  std::function<Outcome()> action;
  auto sig_option = [](CLI::App* sub, std::string& target) {
    sub->add_option("--sig", target, R"(Signature as JSON, e.g. {"g":0,"r":0,"m":[2,3,7]})")->required();
  };

  std::string sig_text;
  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic and kind");
  sig_option(chi, sig_text);
  chi->callback([&] {
    action = [&] {
      const Signature s = parse_signature_json(sig_text);
      return Outcome{Json{{"chi", to_string(euler_characteristic(s))}, {"kind", to_string(classify_kind(s).geometry)}}};
    };
  });

  auto* kind = app.add_subcommand("kind", "Geometry, finiteness and NINF status");
  sig_option(kind, sig_text);
  kind->callback([&] {
    action = [&] {
      const Signature s = parse_signature_json(sig_text);
      const Kind k = classify_kind(s);
      const NinfStatus ninf = satisfies_ninf(s);
      Json j{{"kind", to_string(k.geometry)}, {"finite", k.finite()}, {"order", order_json(k.order)},
             {"ninf", to_string(ninf.status)}};
      if (!ninf.witness.empty()) j["ninf_witness"] = ninf.witness;
      return Outcome{j};
    };
  });

  auto* order = app.add_subcommand("order", "Group order");
  sig_option(order, sig_text);
  order->callback([&] {
    action = [&] { return Outcome{Json{{"order", order_json(finite_order(parse_signature_json(sig_text)))}}}; };
  });

  auto* abel = app.add_subcommand("abelianize", "Abelianization of a signature or presentation file");
  std::string abel_presentation;
  auto* abel_sig = abel->add_option("--sig", sig_text, "Signature as JSON");
  auto* abel_pres = abel->add_option("--presentation", abel_presentation, "Presentation file");
  abel_sig->excludes(abel_pres);
  abel->callback([&] {
    action = [&] {
      if (!abel_presentation.empty()) {
        const PresentationFile pf = parse_presentation_text(read_file(abel_presentation));
        return Outcome{to_json(abelianization_of_presentation(pf.presentation))};
      }
      if (sig_text.empty()) throw ParseError("abelianize needs --sig or --presentation");
      return Outcome{to_json(abelianization(parse_signature_json(sig_text)))};
    };
  });

  std::string iso_a;
  std::string iso_b;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two signatures");
  iso->add_option("--a", iso_a, "First signature")->required();
  iso->add_option("--b", iso_b, "Second signature")->required();
  iso->callback([&] {
    action = [&] {
      return Outcome{to_json(decide_isomorphism(parse_signature_json(iso_a), parse_signature_json(iso_b)))};
    };
  });

  auto* serre = app.add_subcommand("serre", "Plane curve complement realizability");
  sig_option(serre, sig_text);
  serre->callback([&] {
    action = [&] { return Outcome{to_json(plane_curve_realizability(parse_signature_json(sig_text)))}; };
  });

  std::uint64_t cover_index = 0;
  bool cover_lcm = false;
  std::string perms_path;
  auto* cover = app.add_subcommand("cover", "Torsion-free finite index subgroups");
  cover->require_subcommand(0, 1);
  cover->add_option("--sig", sig_text, "Signature as JSON");
  auto* idx_opt = cover->add_option("--index", cover_index, "Index d");
  auto* lcm_opt = cover->add_flag("--lcm", cover_lcm, "Use d = lcm(m) for an open group");
  idx_opt->excludes(lcm_opt);
  auto* cover_verify = cover->add_subcommand("verify", "Certify a permutation quotient has torsion-free kernel");
  sig_option(cover_verify, sig_text);
  cover_verify->add_option("--perms", perms_path, "Permutation file")->required();
  cover->callback([&] {
    if (cover_verify->parsed()) return;
    action = [&] {
      if (sig_text.empty()) throw ParseError("cover needs --sig");
      const Signature s = parse_signature_json(sig_text);
      if (cover_lcm) return Outcome{to_json(lcm_cover_for_free_product(s))};
      if (idx_opt->count() == 0) throw ParseError("cover needs --index or --lcm");
      return Outcome{to_json(torsion_free_subgroup_rank(s, cover_index))};
    };
  });
  cover_verify->callback([&] {
    action = [&] {
      const Signature s = parse_signature_json(sig_text);
      const PermutationImages images = parse_permutation_file(read_file(perms_path), presentation_of(s));
      const KernelCheck k = verify_torsion_free_kernel(s, images);
      int code = kExitOk;
      if (k.verdict == KernelVerdict::Exceeded) code = kExitExceeded;
      else if (k.verdict != KernelVerdict::TorsionFreeKernel) code = kExitVerifyFailed;
      return Outcome{to_json(k), code};
    };
  });

  std::string tc_path;
  std::size_t max_cosets = 0;
  auto* tc = app.add_subcommand("todd-coxeter", "Coset enumeration of a presentation file");
  tc->add_option("--presentation", tc_path, "Presentation file")->required();
  tc->add_option("--max-cosets", max_cosets, "Coset bound")->check(CLI::PositiveNumber);
  tc->callback([&] {
    action = [&] {
      const PresentationFile pf = parse_presentation_text(read_file(tc_path));
      const std::size_t bound = max_cosets > 0 ? max_cosets : default_max_cosets();
      const auto table = coset_enumeration(pf.presentation, pf.subgroup_generators, bound);
      if (!table) return Outcome{Json{{"index", nullptr}, {"exceeded", true}, {"max_cosets", bound}}, kExitExceeded};
      return Outcome{Json{{"index", table->cosets},
                          {"exceeded", false},
                          {"closed", table_is_closed(*table, pf.presentation)}}};
    };
  });

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1, 1);
  int wp_k = 0;
  std::size_t wp_samples = 100;
  std::uint64_t wp_seed = 0;
  auto* wallpaper = verify->add_subcommand("wallpaper", "Torus quotient checks for Z/k");
  wallpaper->add_option("--k", wp_k, "2, 3, 4 or 6")->required();
  wallpaper->add_option("--samples", wp_samples, "Random sample points")->check(CLI::PositiveNumber);
  wallpaper->add_option("--seed", wp_seed, "Sampling seed")->required();
  wallpaper->callback([&] {
    action = [&] {
      const SuiteReport r = run_wallpaper_suite(wp_k, wp_samples, wp_seed);
      return Outcome{to_json(r), r.pass ? kExitOk : kExitVerifyFailed};
    };
  });
  std::string example_name;
  auto* example = verify->add_subcommand("example", "Facts about a named example group");
  example->add_option("--name", example_name, "quartic-b3p1, sextic-b4p1, quintic-237 or artal(d,a,b)")->required();
  example->callback([&] {
    action = [&] {
      const ExampleReport r = verify_example(example_name);
      return Outcome{to_json(r), r.pass ? kExitOk : kExitVerifyFailed};
    };
  });

  std::string tri_m;
  double tri_tol = kTriangleTolerance;
  double tri_margin = kTriangleRejectionMargin;
  auto* tri = app.add_subcommand("triangle-rep", "Hyperbolic triangle group matrices");
  tri->add_option("--m", tri_m, "Three entries, e.g. 2,3,7")->required();
  tri->add_option("--tol", tri_tol, "Acceptance tolerance")->check(CLI::PositiveNumber);
  tri->add_option("--margin", tri_margin, "Rejection margin for smaller powers")->check(CLI::PositiveNumber);
  tri->callback([&] {
    action = [&] {
      const std::vector<int> m = parse_int_list(tri_m);
      if (m.size() != 3) throw MalformedSignature("--m needs exactly three entries");
      const TriangleRep rep = triangle_representation(m[0], m[1], m[2], tri_tol);
      const TriangleReport report = check_triangle_representation(rep, tri_margin);
      return Outcome{to_json(rep, report), report.pass ? kExitOk : kExitVerifyFailed};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitDomain;
  }

  try {
    const Outcome result = action();
    if (text_mode) print_text(out, result.body);
    else out << result.body.dump() << '\n';
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace orbicurve::cli
