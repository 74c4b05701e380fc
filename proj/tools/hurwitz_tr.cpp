#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "htr/amplitude_store.hpp"
#include "htr/hodge.hpp"
#include "htr/hurwitz_oracle.hpp"
#include "htr/serialization.hpp"
#include "htr/verify.hpp"

using namespace htr;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInvariant = 3, kMismatch = 4 };

enum class Format { Json, Csv, Pretty };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::optional<int> trunc;
  std::string cache_dir;
  bool no_cache = false;
  Format format = Format::Json;
  unsigned jobs = 1;
};

struct CurveArgs {
  std::string curve = "lambert";
  bool symbolic = false;
  std::string framing;

  CurveSpec spec() const {
    if (curve == "lambert") {
      if (symbolic || !framing.empty()) throw UsageError("--symbolic-f and --f apply to the framed curve only");
      return CurveSpec::lambert();
    }
    if (symbolic && !framing.empty()) throw UsageError("--symbolic-f and --f are exclusive");
    if (framing.empty()) return CurveSpec::framed_symbolic();
    Rational f;
    try {
      f = Rational::parse(framing);
    } catch (const std::exception&) {
      throw UsageError("--f expects p/q, got '" + framing + "'");
    }
    try {
      return CurveSpec::framed(f);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
};

void add_curve_options(CLI::App* cmd, CurveArgs& c) {
  cmd->add_option("--curve", c.curve, "lambert or framed")->check(CLI::IsMember({"lambert", "framed"}));
  cmd->add_flag("--symbolic-f", c.symbolic, "keep the framing f symbolic (default for framed)");
  cmd->add_option("--f", c.framing, "specialize the framing to a rational p/q");
}

class Session {
 public:
  explicit Session(const Global& g) : global_(g) {
    options_.trunc = g.trunc;
    options_.jobs = g.jobs;
    if (!g.no_cache) {
      try {
        store_.emplace(g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir));
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      options_.store = &*store_;
    }
  }
  AmplitudeCache& cache() { return cache_; }
  const RecursionOptions& options() const { return options_; }
  const AmplitudeStore* store() const { return store_ ? &*store_ : nullptr; }
  Format format() const { return global_.format; }

 private:
  Global global_;
  AmplitudeCache cache_;
  std::optional<AmplitudeStore> store_;
  RecursionOptions options_;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string indices_str(const std::vector<int>& n, char sep = '-') {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(n[i]);
  return s;
}

std::string monomial(const std::vector<int>& n) {
  std::string s;
  for (int k : n) s += "z" + std::to_string(k);
  return s;
}

// "1/5760(7z2-12z3+5z4)" over Q; one "(value)monomial" term per entry over Q(f).
std::string pretty_tensor(const WAmplitude& amp) {
  if (amp.coeffs.empty()) return "0";
  if (amp.spec.field() == Field::RationalFunction) {
    std::string s;
    for (const auto& [n, c] : amp.coeffs) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")" + monomial(n));
    return s;
  }
  mpz_class den = 1;
  for (const auto& [n, c] : amp.coeffs) den = lcm(den, c.as_rational().denominator());
  std::string body;
  for (const auto& [n, c] : amp.coeffs) {
    const Rational scaled = c.as_rational() * Rational(den);
    mpz_class k = scaled.numerator();
    std::string term = k < 0 ? "-" : (body.empty() ? "" : "+");
    k = abs(k);
    if (k != 1) term += k.get_str();
    body += term + monomial(n);
  }
  return den == 1 ? body : "1/" + den.get_str() + "(" + body + ")";
}

int cmd_w(Session& s, const CurveArgs& curve, int g, int h, int order) {
  const CurveSpec spec = curve.spec();
  if (g < 0 || h < 1) throw UsageError("need g >= 0 and h >= 1");
  if (g == 0 && h == 1) {
    const LaurentSeries d = w_unstable_disk(spec, order);
    if (s.format() == Format::Json) {
      Json j = curve_spec_to_json(spec);
      j["g"] = 0;
      j["h"] = 1;
      j["basis"] = "x";
      j["series"] = to_json(d);
      print_json(j);
    } else if (s.format() == Format::Csv) {
      std::cout << "power,value\n";
      for (int k = d.lowest(); k < order; ++k) std::cout << k << "," << csv_quote(d.coefficient(k).str()) << "\n";
    } else {
      std::string text = d.str();
      for (std::size_t p = text.find("z^"); p != std::string::npos; p = text.find("z^", p)) text[p] = 'x';
      std::cout << text << "\n";
    }
    return kOk;
  }
  if (g == 0 && h == 2) {
    const BivariateSeries a = w_unstable_annulus(spec, order);
    Json rows = Json::array();
    if (s.format() == Format::Csv) std::cout << "i,j,value\n";
    for (int d = 0; d < order; ++d) {
      for (int i = d; i >= 0; --i) {
        const Scalar& c = a.coefficient(i, d - i);
        if (c.is_zero()) continue;
        if (s.format() == Format::Csv) {
          std::cout << i << "," << d - i << "," << csv_quote(c.str()) << "\n";
        } else if (s.format() == Format::Pretty) {
          std::cout << "x1^" << i << " x2^" << d - i << ": " << c.str() << "\n";
        }
        rows.push_back(Json{{"i", i}, {"j", d - i}, {"value", to_json(c)}});
      }
    }
    if (s.format() == Format::Json) {
      Json j = curve_spec_to_json(spec);
      j["g"] = 0;
      j["h"] = 2;
      j["basis"] = "x";
      j["order"] = order;
      j["coeffs"] = std::move(rows);
      print_json(j);
    }
    return kOk;
  }
  const auto amp = w_amplitude(s.cache(), spec, g, h, s.options());
  switch (s.format()) {
    case Format::Json:
      print_json(to_json(*amp));
      break;
    case Format::Csv:
      std::cout << "n,value\n";
      for (const auto& [n, c] : amp->coeffs) std::cout << indices_str(n) << "," << csv_quote(c.str()) << "\n";
      break;
    case Format::Pretty:
      std::cout << pretty_tensor(*amp) << "\n";
      break;
  }
  return kOk;
}

std::vector<Partition> partitions_arg(const std::vector<std::string>& mus, int table_size) {
  std::vector<Partition> out;
  try {
    for (const auto& m : mus) out.push_back(Partition::parse(m));
  } catch (const std::exception& e) {
    throw UsageError(std::string("--mu: ") + e.what());
  }
  for (int n = 1; n <= table_size; ++n) {
    for (const auto& mu : partitions_of(n)) out.push_back(mu);
  }
  if (out.empty()) throw UsageError("give --mu or --table-size");
  return out;
}

int cmd_hurwitz(Session& s, int g, const std::vector<Partition>& mus, const std::string& source, bool both) {
  if (g < 0) throw UsageError("need g >= 0");
  int max_b = 0;
  int max_size = 0;
  for (const auto& mu : mus) {
    max_b = std::max(max_b, 2 * g - 2 + mu.length() + mu.size());
    max_size = std::max(max_size, mu.size());
  }
  const bool want_oracle = both || source == "oracle";
  const bool want_recursion = both || source == "recursion";
  std::optional<HurwitzSeries> free_energy;
  if (want_oracle) free_energy = HurwitzSeries::partition_function(std::max(max_b, 0), max_size).log();

  bool all_match = true;
  Json out = Json::array();
  if (s.format() == Format::Csv) std::cout << (both ? "g,mu,b,recursion,oracle,match\n" : "g,mu,b,value\n");
  for (const auto& mu : mus) {
    const int b = 2 * g - 2 + mu.length() + mu.size();
    if (b < 0) throw UsageError("no Hurwitz number for g=" + std::to_string(g) + " mu=" + mu.str());
    std::optional<Rational> rec, ora;
    if (want_recursion) rec = hurwitz_from_recursion(s.cache(), g, mu, s.options()).value;
    if (want_oracle) ora = connected_hurwitz(*free_energy, g, mu);
    const bool match = !both || *rec == *ora;
    all_match = all_match && match;
    const Rational& value = rec ? *rec : *ora;
    switch (s.format()) {
      case Format::Json: {
        Json j{{"g", g}, {"mu", mu.str()}, {"b", b}};
        if (both) {
          j["recursion"] = to_json(*rec);
          j["oracle"] = to_json(*ora);
          j["match"] = match;
        } else {
          j["value"] = to_json(value);
        }
        out.push_back(std::move(j));
        break;
      }
      case Format::Csv:
        std::cout << g << "," << mu.str() << "," << b << ",";
        if (both) {
          std::cout << rec->str() << "," << ora->str() << "," << (match ? "true" : "false") << "\n";
        } else {
          std::cout << value.str() << "\n";
        }
        break;
      case Format::Pretty:
        std::cout << "H_{" << g << "," << mu.str() << "} = ";
        if (both) {
          std::cout << rec->str() << " (recursion), " << ora->str() << " (oracle), " << (match ? "match" : "MISMATCH")
                    << "\n";
        } else {
          std::cout << value.str() << "\n";
        }
        break;
    }
  }
  if (s.format() == Format::Json) print_json(out);
  return all_match ? kOk : kMismatch;
}

int cmd_bracket(Session& s, int g, const std::string& indices_text, bool triple) {
  std::vector<int> indices;
  std::stringstream ss(indices_text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      indices.push_back(std::stoi(item, &used));
      if (used != item.size() || indices.back() < 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--indices expects comma-separated non-negative integers");
    }
  }
  if (!is_stable(g, static_cast<int>(indices.size()))) throw UsageError("(g, h) must satisfy 2g - 2 + h > 0");
  const HodgeBracket b = triple ? framed_bracket(s.cache(), g, indices, s.options())
                                : hodge_bracket(s.cache(), g, indices, s.options());
  switch (s.format()) {
    case Format::Json:
      print_json(Json{{"g", b.g}, {"indices", b.indices}, {"kind", triple ? "triple" : "single"}, {"value", to_json(b.value)}});
      break;
    case Format::Csv:
      std::cout << "g,indices,kind,value\n"
                << b.g << "," << indices_str(b.indices) << "," << (triple ? "triple" : "single") << ","
                << csv_quote(b.value.str()) << "\n";
      break;
    case Format::Pretty:
      std::cout << "<";
      for (int n : b.indices) std::cout << "tau_" << n << " ";
      std::cout << (triple ? "L(1)L(-f-1)L(f)" : "L(1)") << ">_" << b.g << " = " << b.value.str() << "\n";
      break;
  }
  return kOk;
}

int print_limit_reports(Session& s, const std::vector<LimitReport>& reports) {
  bool ok = true;
  Json out = Json::array();
  if (s.format() == Format::Csv) std::cout << "g,h,indices,triple,single,degree,ok\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      ok = ok && row.ok();
      switch (s.format()) {
        case Format::Json:
          out.push_back(Json{{"g", r.g},
                             {"h", r.h},
                             {"indices", row.indices},
                             {"triple", to_json(row.triple)},
                             {"single", to_json(row.single)},
                             {"degree", row.degree},
                             {"ok", row.ok()}});
          break;
        case Format::Csv:
          std::cout << r.g << "," << r.h << "," << indices_str(row.indices) << "," << csv_quote(row.triple.str()) << ","
                    << row.single.str() << "," << row.degree << "," << (row.ok() ? "true" : "false") << "\n";
          break;
        case Format::Pretty:
          std::printf("(%d,%d) [%s]  deg %d  %s  triple %s  single %s\n", r.g, r.h, indices_str(row.indices, ',').c_str(),
                      row.degree, row.ok() ? "ok" : "FAIL", row.triple.str().c_str(), row.single.str().c_str());
          break;
      }
    }
  }
  if (s.format() == Format::Json) print_json(out);
  return ok ? kOk : kMismatch;
}

int cmd_limits(Session& s, std::optional<int> g, std::optional<int> h) {
  std::vector<std::pair<int, int>> topologies;
  if (g || h) {
    if (!g || !h) throw UsageError("give both -g and -h, or neither");
    if (!is_stable(*g, *h)) throw UsageError("(g, h) must satisfy 2g - 2 + h > 0");
    topologies.emplace_back(*g, *h);
  } else {
    topologies = {{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}};
  }
  std::vector<LimitReport> reports;
  for (auto [gg, hh] : topologies) reports.push_back(framing_limit_check(s.cache(), gg, hh, s.options()));
  return print_limit_reports(s, reports);
}

int print_suites(Session& s, const std::vector<SuiteResult>& results) {
  bool ok = true;
  Json out = Json::array();
  if (s.format() == Format::Csv) std::cout << "suite,name,pass,checks,seconds,limit,failures\n";
  for (const auto& r : results) {
    ok = ok && r.pass();
    switch (s.format()) {
      case Format::Json:
        out.push_back(Json{{"suite", r.id},
                           {"name", r.name},
                           {"pass", r.pass()},
                           {"checks", r.checks},
                           {"seconds", r.seconds},
                           {"limit_seconds", r.limit_seconds},
                           {"failures", r.failures}});
        break;
      case Format::Csv:
        std::cout << r.id << "," << r.name << "," << (r.pass() ? "true" : "false") << "," << r.checks << "," << r.seconds
                  << "," << r.limit_seconds << "," << r.failures.size() << "\n";
        break;
      case Format::Pretty:
        std::printf("%d  %-26s %s  %5d checks  %8.3fs / %gs\n", r.id, r.name.c_str(), r.pass() ? "PASS" : "FAIL",
                    r.checks, r.seconds, r.limit_seconds);
        for (const auto& f : r.failures) std::printf("     %s\n", f.c_str());
        break;
    }
  }
  if (s.format() == Format::Json) print_json(out);
  return ok ? kOk : kMismatch;
}

int cmd_verify(Session& s, const std::string& sweep, bool limits) {
  // Verification always recomputes: the on-disk layer is bypassed.
  RecursionOptions opts = s.options();
  opts.store = nullptr;
  std::vector<SuiteResult> results;
  if (!sweep.empty()) {
    SweepBounds bounds;
    try {
      bounds = parse_sweep_bounds(sweep);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    AmplitudeCache cache;
    if (s.format() == Format::Pretty) {
      for (const auto& row : oracle_sweep(cache, bounds, opts)) {
        std::printf("g=%d mu=%-10s %s %s %s\n", row.g, row.mu.str().c_str(), row.recursion.str().c_str(),
                    row.oracle.str().c_str(), row.recursion == row.oracle ? "match" : "MISMATCH");
      }
    }
    results.push_back(suite_oracle_sweep(cache, bounds, opts));
  }
  if (limits) {
    AmplitudeCache cache;
    results.push_back(suite_framing_limits(cache, opts));
  }
  if (sweep.empty() && !limits) results = run_all_suites(opts);
  return print_suites(s, results);
}

int cmd_cache(Session& s, const std::string& action, int budget, const CurveArgs& curve) {
  const AmplitudeStore* store = s.store();
  if (!store) throw UsageError("the cache command needs the on-disk cache (drop --no-cache)");
  if (action == "list") {
    const auto rows = store->list();
    Json out = Json::array();
    if (s.format() == Format::Csv) std::cout << "file,curve,g,h,trunc\n";
    for (const auto& l : rows) {
      if (s.format() == Format::Json) {
        out.push_back(Json{{"file", l.file}, {"curve", l.curve}, {"g", l.g}, {"h", l.h}, {"trunc", l.trunc}});
      } else if (s.format() == Format::Csv) {
        std::cout << l.file << "," << csv_quote(l.curve) << "," << l.g << "," << l.h << "," << l.trunc << "\n";
      } else {
        std::printf("%-32s %-14s g=%d h=%d trunc=%d\n", l.file.c_str(), l.curve.c_str(), l.g, l.h, l.trunc);
      }
    }
    if (s.format() == Format::Json) print_json(out);
    return kOk;
  }
  if (action == "clear") {
    const std::size_t n = store->clear();
    if (s.format() == Format::Json) {
      print_json(Json{{"removed", n}});
    } else {
      std::cout << "removed " << n << " file(s)\n";
    }
    return kOk;
  }
  // prewarm: every stable (g, h), h >= 1, with 2g - 2 + h <= budget.
  if (budget < 1) throw UsageError("prewarm needs --budget >= 1");
  const CurveSpec spec = curve.spec();
  Json out = Json::array();
  for (int chi = 1; chi <= budget; ++chi) {
    for (int g = 0; 2 * g - 2 < chi; ++g) {
      const int h = chi - 2 * g + 2;
      if (h < 1 || !is_stable(g, h)) continue;
      w_amplitude(s.cache(), spec, g, h, s.options());
      const std::string file = store->path_for(spec, g, h).filename().string();
      if (s.format() == Format::Json) {
        out.push_back(Json{{"file", file}, {"g", g}, {"h", h}});
      } else {
        std::cout << file << "\n";
      }
    }
  }
  if (s.format() == Format::Json) print_json(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz numbers and Hodge integrals from the Eynard-Orantin recursion"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  std::string format = "json";
  app.add_option("--trunc", global.trunc, "starting curve truncation")->check(CLI::Range(3, 1000));
  app.add_option("--cache-dir", global.cache_dir, "amplitude cache directory (default $HURWITZ_TR_CACHE or .hurwitz-tr-cache)");
  app.add_flag("--no-cache", global.no_cache, "do not read or write the on-disk cache");
  app.add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--jobs", global.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  CurveArgs curve;
  int g = 0;
  int h = 1;
  int order = 8;
  auto* w = app.add_subcommand("w", "W_g(y_1..y_h) in the zeta basis, or the unstable disk/annulus series");
  add_curve_options(w, curve);
  w->add_option("-g", g, "genus")->required();
  w->add_option("-h", h, "number of points")->required();
  w->add_option("--order", order, "series order for (0,1) and (0,2)")->check(CLI::Range(1, 200));

  std::vector<std::string> mus;
  int table_size = 0;
  std::string source = "recursion";
  bool both = false;
  auto* hz = app.add_subcommand("hurwitz", "connected Hurwitz numbers H_{g,mu}");
  hz->add_option("-g", g, "genus")->required();
  hz->add_option("--mu", mus, "partition, comma-separated parts (repeatable)");
  hz->add_option("--table-size", table_size, "all partitions with |mu| up to this size")->check(CLI::Range(0, 12));
  hz->add_option("--source", source, "recursion or oracle")->check(CLI::IsMember({"recursion", "oracle"}));
  hz->add_flag("--both", both, "compute both and compare");

  std::string indices;
  bool triple = false;
  auto* br = app.add_subcommand("bracket", "Hodge bracket <tau_n1..tau_nh Lambda>");
  br->add_option("-g", g, "genus")->required();
  br->add_option("--indices", indices, "comma-separated n_i")->required();
  br->add_flag("--triple", triple, "triple-Lambda bracket of the framed vertex (symbolic f)");

  std::string sweep;
  bool limits = false;
  auto* vf = app.add_subcommand("verify", "run the verification suites (all of them by default)");
  vf->add_option("--sweep", sweep, "oracle sweep only, with bounds like \"g<=2,|mu|<=5\"");
  vf->add_flag("--limits", limits, "framing-limit suite only");

  std::optional<int> lg, lh;
  auto* lm = app.add_subcommand("limits", "framing-limit report");
  lm->add_option("-g", lg, "genus");
  lm->add_option("-h", lh, "number of points");

  int budget = 0;
  std::string action;
  auto* ca = app.add_subcommand("cache", "list, clear or prewarm the amplitude cache");
  ca->add_option("action", action, "list, clear or prewarm")->required()->check(CLI::IsMember({"list", "clear", "prewarm"}));
  ca->add_option("--budget", budget, "prewarm all stable (g,h) with 2g-2+h <= budget");
  add_curve_options(ca, curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  global.format = format == "csv" ? Format::Csv : format == "pretty" ? Format::Pretty : Format::Json;

  try {
    Session session(global);
    if (*w) return cmd_w(session, curve, g, h, order);
    if (*hz) return cmd_hurwitz(session, g, partitions_arg(mus, table_size), source, both);
    if (*br) return cmd_bracket(session, g, indices, triple);
    if (*vf) return cmd_verify(session, sweep, limits);
    if (*lm) return cmd_limits(session, lg, lh);
    if (*ca) return cmd_cache(session, action, budget, curve);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const FieldMismatch& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
