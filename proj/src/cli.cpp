#include "sdgqc/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdgqc/census.hpp"
#include "sdgqc/code_io.hpp"
#include "sdgqc/constructions.hpp"
#include "sdgqc/gv_bounds.hpp"
#include "sdgqc/linear_code.hpp"
#include "sdgqc/mass_formulas.hpp"
#include "sdgqc/selftest.hpp"

namespace sdgqc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void write_code_output(std::ostream& out, const LinearCode& c, const std::string& path) {
  if (path.empty()) {
    write_code(out, c);
  } else {
    save_code(path, c);
  }
}

InnerProduct parse_inner(const std::string& s, FieldId f) {
  if (s.empty()) return default_inner_product(f);
  if (s == "euclidean") return InnerProduct::Euclidean;
  if (s == "hermitian") return InnerProduct::Hermitian;
  throw std::invalid_argument("unknown inner product '" + s + "'");
}

Json report_json(const BoundReport& r) {
  Json j;
  j["ell"] = r.ell;
  j["d"] = r.d;
  j["mode"] = std::string(bound_mode_name(r.mode));
  j["type2"] = r.type2;
  j["lhs"] = to_decimal(r.lhs);
  j["rhs"] = to_decimal(r.rhs);
  j["holds"] = r.holds;
  j["delta"] = to_decimal(r.delta);
  return j;
}

void print_report(std::ostream& out, const BoundReport& r) {
  out << "lhs=" << to_decimal(r.lhs) << '\n'
      << "rhs=" << to_decimal(r.rhs) << '\n'
      << "holds=" << (r.holds ? "true" : "false") << '\n'
      << "delta=" << to_decimal(r.delta) << '\n';
}

struct Options {
  std::string code, c1, c2, construction, inner, mode = "exact", containing, out, list_dir;
  unsigned q = 2, ell = 0, d = 0, threads = 1, trials = 0;
  std::uint64_t seed = 0, budget = std::uint64_t{1} << 24;
  std::vector<unsigned> ells;
  bool type2 = false, json = false, interleave = false, literal_paper = false, tally = false, containing_flag = false;
  double x = -1, inverse = -1;
};

int cmd_construct(const Options& o, std::ostream& out) {
  const auto c1 = load_code(o.c1);
  const auto c2 = load_code(o.c2);
  LinearCode result;
  if (o.construction == "cubic") {
    result = cubic_code({c1, c2});
    if (o.interleave) result = interleave(result, c1.length(), 3);
  } else if (o.construction == "quintic") {
    result = quintic_code({c1, c2});
    if (o.interleave) result = interleave(result, c1.length(), 5);
  } else {
    // gqc: c1 is a block-order code of length 3l, c2 one of length 5l.
    if (c1.length() % 3 != 0 || c2.length() % 5 != 0) {
      throw std::invalid_argument("gqc: --c1 must have length 3l and --c2 length 5l");
    }
    result = direct_sum_gqc(interleave(c1, c1.length() / 3, 3), interleave(c2, c2.length() / 5, 5));
  }
  write_code_output(out, result, o.out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto c = load_code(o.code);
  const InnerProduct ip = parse_inner(o.inner, c.field());
  const bool sd = is_self_dual(c, ip);
  const bool t2 = o.type2 && c.field() == FieldId::GF2 && is_type_ii(c);
  if (o.type2 && c.field() != FieldId::GF2) throw std::invalid_argument("--type2 applies to binary codes only");
  if (o.json) {
    Json j;
    j["q"] = order(c.field());
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["inner"] = std::string(inner_product_name(ip));
    j["self_dual"] = sd;
    if (o.type2) j["type2"] = t2;
    emit(out, j);
  } else {
    out << "n: " << c.length() << '\n'
        << "k: " << c.dimension() << '\n'
        << "inner: " << inner_product_name(ip) << '\n'
        << "self-dual: " << (sd ? "true" : "false") << '\n';
    if (o.type2) out << "type-ii: " << (t2 ? "true" : "false") << '\n';
  }
  return (sd && (!o.type2 || t2)) ? kOk : kPredicateFalse;
}

int cmd_mindist(const Options& o, std::ostream& out) {
  const auto c = load_code(o.code);
  const EnumerationOptions eo{o.budget, o.threads};
  if (o.tally) {
    const auto t = weight_tally(c, eo);
    if (o.json) {
      Json j;
      j["min_distance"] = t.min_nonzero_weight();
      Json tally = Json::object();
      for (std::size_t w = 0; w < t.counts.size(); ++w)
        if (t.counts[w] != 0) tally[std::to_string(w)] = to_decimal(t.counts[w]);
      j["tally"] = tally;
      emit(out, j);
    } else {
      out << "min-distance: " << t.min_nonzero_weight() << '\n';
      for (std::size_t w = 0; w < t.counts.size(); ++w)
        if (t.counts[w] != 0) out << "weight " << w << ": " << to_decimal(t.counts[w]) << '\n';
    }
    return kOk;
  }
  const auto d = min_distance(c, eo);
  if (o.json) {
    Json j;
    j["min_distance"] = d;
    emit(out, j);
  } else {
    out << "min-distance: " << d << '\n';
  }
  return kOk;
}

int cmd_mass(const Options& o, std::ostream& out, std::ostream& err) {
  std::string value;
  std::string name;
  if (o.q == 2) {
    if (o.type2) {
      value = to_decimal(o.containing_flag ? s_type2(o.ell) : t_type2(o.ell));
      name = o.containing_flag ? "S(2,l)" : "T(2,l)";
    } else {
      value = to_decimal(o.containing_flag ? m_sd_binary(o.ell) : n_sd_binary(o.ell));
      name = o.containing_flag ? "M(2,l)" : "N(2,l)";
    }
  } else if (o.q == 16) {
    if (o.type2) throw std::invalid_argument("--type2 applies to --q 2 only");
    name = o.containing_flag ? "M(16,l)" : "N(16,l)";
    const BigCount corrected = o.containing_flag ? m_sd_hermitian16(o.ell) : n_sd_hermitian16(o.ell);
    if (o.literal_paper) {
      const BigRational literal =
          o.containing_flag ? literal_m_sd_hermitian16(o.ell) : literal_n_sd_hermitian16(o.ell);
      value = to_decimal(literal);
      if (literal != BigRational(corrected)) {
        err << "warning: printed-form " << name << " = " << value << " disagrees with the exact count "
            << to_decimal(corrected) << '\n';
      }
    } else {
      value = to_decimal(corrected);
    }
  } else {
    throw std::invalid_argument("mass: --q must be 2 or 16");
  }
  if (o.json) {
    Json j;
    j["q"] = o.q;
    j["ell"] = o.ell;
    j["quantity"] = name;
    j["literal_paper"] = o.literal_paper;
    j["value"] = value;
    emit(out, j);
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  CensusQuery q;
  q.field = field_from_order(o.q);
  q.n = o.ell;
  q.type2 = o.type2;
  if (!o.containing.empty()) q.containing = Vector::parse(q.field, o.containing);
  CensusOptions co;
  co.threads = o.threads;
  co.keep_codes = !o.list_dir.empty();
  const auto r = census(q, co);
  if (!o.list_dir.empty()) {
    std::filesystem::create_directories(o.list_dir);
    for (std::size_t i = 0; i < r.codes.size(); ++i) {
      std::ostringstream name;
      name << "code_" << std::setw(6) << std::setfill('0') << i << ".txt";
      save_code(std::filesystem::path(o.list_dir) / name.str(), r.codes[i]);
    }
  }
  if (o.json) {
    Json j;
    j["q"] = o.q;
    j["n"] = o.ell;
    j["type2"] = o.type2;
    j["containing"] = o.containing.empty() ? Json(nullptr) : Json(o.containing);
    j["count"] = to_decimal(r.count);
    j["states"] = r.states;
    emit(out, j);
  } else {
    out << to_decimal(r.count) << '\n';
  }
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const auto c = sample_self_dual(SdSampler{field_from_order(o.q), o.ell, o.seed});
  write_code_output(out, c, o.out);
  return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const BoundMode mode = bound_mode_from_string(o.mode);
  const auto r = o.type2 ? theorem2_check(o.ell, o.d, mode) : theorem1_check(o.ell, o.d, mode);
  if (o.json) emit(out, report_json(r));
  else print_report(out, r);
  return r.holds ? kOk : kPredicateFalse;
}

int cmd_maxdist(const Options& o, std::ostream& out) {
  const BoundMode mode = bound_mode_from_string(o.mode);
  const auto m = max_distance(o.ell, mode, o.type2, o.threads);
  // Optional randomized search for a code attaining the certified distance.
  std::optional<QuinticWitness> w;
  if (o.trials > 0) {
    if (o.type2) throw std::invalid_argument("maxdist: --trials is available for the self-dual variant only");
    w = find_quintic_witness(o.ell, m.d_star, o.trials, o.seed);
  }
  if (o.json) {
    Json j = report_json(m.report);
    j["d_star"] = m.d_star;
    if (w) {
      j["witness"] = Json{{"found", w->found}, {"trials", w->trials}, {"seed", o.seed}};
      if (w->found) j["witness"]["min_distance"] = w->min_distance;
    }
    emit(out, j);
  } else {
    out << "d_star=" << m.d_star << '\n';
    print_report(out, m.report);
    if (w) {
      out << "witness=" << (w->found ? "found" : "none") << '\n' << "witness_trials=" << w->trials << '\n';
      if (w->found) out << "witness_min_distance=" << w->min_distance << '\n';
    }
  }
  return (w && !w->found) ? kPredicateFalse : kOk;
}

int cmd_asymptote(const Options& o, std::ostream& out) {
  const BoundMode mode = bound_mode_from_string(o.mode);
  const auto family = o.type2 ? AsymptoteFamily::QuinticType2 : AsymptoteFamily::Quintic;
  for (auto l : o.ells) {
    if (o.type2 ? (l == 0 || l % 8 != 0) : (l == 0 || l % 2 != 0)) {
      throw std::invalid_argument("asymptote: invalid l " + std::to_string(l));
    }
  }
  const auto rows = asymptote_table(family, o.ells, mode, o.threads);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["ell"] = r.ell;
      j["d_star"] = r.d_star;
      j["delta"] = r.delta;
      j["gqc_delta"] = r.gqc_delta;
      j["mode"] = std::string(bound_mode_name(mode));
      arr.push_back(j);
    }
    emit(out, arr);
  } else {
    out << "ell,d_star,delta,mode\n";
    for (const auto& r : rows)
      out << r.ell << ',' << r.d_star << ',' << format_double(r.delta) << ',' << bound_mode_name(mode) << '\n';
  }
  return kOk;
}

int cmd_entropy(const Options& o, std::ostream& out) {
  const bool inverse = o.inverse >= 0;
  if (inverse == (o.x >= 0)) throw std::invalid_argument("entropy: give exactly one of --x or --inverse");
  const double v = inverse ? inverse_entropy(o.q, o.inverse) : entropy(o.q, o.x);
  if (o.json) {
    Json j;
    j["q"] = o.q;
    j[inverse ? "y" : "x"] = inverse ? o.inverse : o.x;
    j[inverse ? "x" : "h"] = v;
    emit(out, j);
  } else {
    out << format_double(v) << '\n';
  }
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  const auto checks = run_selftest({o.literal_paper, o.threads});
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    ok &= c.passed;
    if (o.json) {
      arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
    if (!c.passed) err << "selftest failed: " << c.name << ": " << c.detail << '\n';
  }
  if (o.json) emit(out, Json{{"passed", ok}, {"checks", arr}});
  return ok ? kOk : kPredicateFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual quasi-cyclic and generalized quasi-cyclic binary codes"};
  app.name("sdgqc");
  app.require_subcommand(1);
  Options o;

  auto threads = [&](CLI::App* s) {
    s->add_option("--threads", o.threads, "Worker threads; output does not depend on it")->check(CLI::Range(1U, 256U));
  };
  auto json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Machine-readable JSON output"); };
  auto field = [&](CLI::App* s, bool with4) {
    s->add_option("--q", o.q, "Field order")
        ->required()
        ->check(with4 ? CLI::IsMember({2U, 4U, 16U}) : CLI::IsMember({2U, 16U}));
  };
  const std::vector<std::string> modes = {"literal", "exact"};

  auto* construct = app.add_subcommand("construct", "Build a code from a construction pair");
  construct->add_option("--c1", o.c1, "Binary code file (for gqc: the length-3l code)")->required();
  construct->add_option("--c2", o.c2, "GF(4)/GF(16) code file (for gqc: the length-5l binary code)")->required();
  construct->add_option("--construction", o.construction, "cubic, quintic or gqc")
      ->required()
      ->check(CLI::IsMember({"cubic", "quintic", "gqc"}));
  construct->add_flag("--interleave", o.interleave, "Emit section order instead of block order");
  construct->add_option("--out", o.out, "Write the code file here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check self-duality (and Type II)");
  verify->add_option("--code", o.code, "Code file")->required();
  verify->add_option("--inner", o.inner, "euclidean or hermitian (default by field)")
      ->check(CLI::IsMember({"euclidean", "hermitian"}));
  verify->add_flag("--type2", o.type2, "Also require Type II");
  json(verify);

  auto* mindist = app.add_subcommand("mindist", "Exhaustive minimum distance");
  mindist->add_option("--code", o.code, "Code file")->required();
  mindist->add_option("--budget", o.budget, "Largest admissible number of codewords");
  mindist->add_flag("--tally", o.tally, "Print the full weight distribution");
  threads(mindist);
  json(mindist);

  auto* mass = app.add_subcommand("mass", "Evaluate a mass formula");
  field(mass, false);
  mass->add_option("--ell", o.ell, "Length")->required();
  mass->add_flag("--type2", o.type2, "Type II counts (q=2, 8 | l)");
  mass->add_flag("--containing", o.containing_flag, "Codes containing a fixed admissible vector");
  mass->add_flag("--literal-paper", o.literal_paper, "Use the historical printed GF(16) formula");
  json(mass);

  auto* census_cmd = app.add_subcommand("census", "Exhaustive census of self-dual codes");
  field(census_cmd, true);
  census_cmd->add_option("--ell", o.ell, "Length")->required();
  census_cmd->add_flag("--type2", o.type2, "Type II codes only");
  census_cmd->add_option("--containing", o.containing, "Only codes containing this vector (one symbol per char)");
  census_cmd->add_option("--list", o.list_dir, "Write one code file per code into this directory");
  threads(census_cmd);
  json(census_cmd);

  auto* sample = app.add_subcommand("sample", "Uniformly random self-dual code");
  field(sample, true);
  sample->add_option("--ell", o.ell, "Length (even)")->required();
  sample->add_option("--seed", o.seed, "64-bit seed")->required();
  sample->add_option("--out", o.out, "Write the code file here instead of stdout");

  auto* bound = app.add_subcommand("bound", "Evaluate one existence inequality");
  bound->add_option("--ell", o.ell, "l (length 5l)")->required();
  bound->add_option("--d", o.d, "Target distance")->required();
  bound->add_option("--mode", o.mode, "literal or exact")->check(CLI::IsMember(modes));
  bound->add_flag("--type2", o.type2, "Doubly-even variant (8 | l)");
  json(bound);

  auto* maxdist = app.add_subcommand("maxdist", "Largest certified distance");
  maxdist->add_option("--ell", o.ell, "l (length 5l)")->required();
  maxdist->add_option("--mode", o.mode, "literal or exact")->check(CLI::IsMember(modes));
  maxdist->add_flag("--type2", o.type2, "Doubly-even variant (8 | l)");
  maxdist->add_option("--trials", o.trials, "Also search this many random quintic codes for one with distance >= d_star");
  maxdist->add_option("--seed", o.seed, "Root seed for --trials");
  threads(maxdist);
  json(maxdist);

  auto* asymptote = app.add_subcommand("asymptote", "CSV of certified relative distances");
  asymptote->add_option("--ell", o.ells, "Values of l (repeatable or comma separated)")->required()->delimiter(',');
  asymptote->add_option("--mode", o.mode, "literal or exact")->check(CLI::IsMember(modes));
  asymptote->add_flag("--type2", o.type2, "Doubly-even variant (8 | l)");
  threads(asymptote);
  json(asymptote);

  auto* entropy_cmd = app.add_subcommand("entropy", "q-ary entropy or its inverse");
  entropy_cmd->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(2U, 1U << 20));
  entropy_cmd->add_option("--x", o.x, "Evaluate H_q(x)");
  entropy_cmd->add_option("--inverse", o.inverse, "Solve H_q(x) = y on [0, (q-1)/q]");
  json(entropy_cmd);

  auto* selftest = app.add_subcommand("selftest", "Census-versus-formula and identity checks");
  selftest->add_flag("--literal-paper", o.literal_paper, "Check against the printed GF(16) formula");
  threads(selftest);
  json(selftest);

  std::vector<std::string> argv_store{"sdgqc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (mindist->parsed()) return cmd_mindist(o, out);
    if (mass->parsed()) return cmd_mass(o, out, err);
    if (census_cmd->parsed()) return cmd_census(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (maxdist->parsed()) return cmd_maxdist(o, out);
    if (asymptote->parsed()) return cmd_asymptote(o, out);
    if (entropy_cmd->parsed()) return cmd_entropy(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sdgqc::cli
