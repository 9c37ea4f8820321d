// facering: verification reports for face-ring invariants of simplicial
// complexes. Every command loads a .cplx file (except mvector), runs the
// requested computation over Q or a prime field, and prints a report as
// text or JSON. Exit codes: 0 all checks pass (or are not applicable),
// 1 any FAIL or failed certification, 2 usage or input errors.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "facering/homology.hpp"
#include "facering/manifold_g.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace facering;

namespace {

struct Options {
  std::string field_spec = "Q";
  std::uint64_t seed = 1;
  int trials = 3;
  bool json = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field_spec,
                  "coefficient field: Q, Fp:<p>, or F<p> (default Q)");
  sub->add_option("--seed", o.seed, "master seed for random linear forms");
  sub->add_option("--trials", o.trials, "resamples / genericity trials")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--json", o.json, "emit the report as JSON");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SimplicialComplex load_complex(const std::string& path) {
  return SimplicialComplex::load_file(path);
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

// Run fn with the requested field instance. Throws std::invalid_argument on
// malformed specs; PrimeField rejects composite or oversized moduli.
template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
  if (spec == "Q" || spec == "q") {
    Rationals f;
    return fn(f);
  }
  std::string s = spec;
  std::uint64_t p = 32003;
  if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
    s = s.substr(3);
  } else if (s == "Fp" || s == "fp") {
    s.clear();
  } else if ((s[0] == 'F' || s[0] == 'f') && s.size() > 1) {
    s = s.substr(1);
  } else {
    throw std::invalid_argument("unknown field spec '" + spec +
                                "' (expected Q, Fp:<p>, or F<p>)");
  }
  if (!s.empty()) {
    std::size_t used = 0;
    p = std::stoull(s, &used);
    if (used != s.size())
      throw std::invalid_argument("bad field modulus '" + s + "'");
  }
  PrimeField f(p);
  return fn(f);
}

template <class F>
constexpr bool is_prime_field() {
  return requires(const F& f) { f.modulus(); };
}

template <class F>
void charp_note(const F&, VerificationReport& rep) {
  if constexpr (is_prime_field<F>())
    rep.add_note(
        "characteristic-p evidence: Lefschetz-type conclusions are certified "
        "for this modulus only");
}

// stamp + print + exit-code for a finished report
int emit(VerificationReport rep, const Options& o, const std::string& name) {
  rep.complex_name = name;
  rep.seed = o.seed;
  std::cout << (o.json ? to_json(rep) : to_text(rep));
  return rep.failed() ? 1 : 0;
}

template <class F>
VerificationReport classification_report(const F& field,
                                         const SimplicialComplex& k,
                                         const Options& o) {
  VerificationReport rep;
  rep.theorem = "classification";
  rep.field = field.name();
  rep.trials = o.trials;
  Classification cls = classify(field, k);
  int dim = k.is_void() ? -2 : k.d() - 1;
  rep.checks.push_back(info("dimension", std::to_string(dim)));
  rep.checks.push_back(info("f-vector", vec_to_string(k.f_vector())));
  rep.checks.push_back(info("pure", yes_no(cls.pure)));
  rep.checks.push_back(info("connected", yes_no(cls.connected)));
  rep.checks.push_back(info("Buchsbaum", yes_no(cls.buchsbaum)));
  rep.checks.push_back(info("homology manifold", yes_no(cls.manifold)));
  rep.checks.push_back(info("homology sphere", yes_no(cls.sphere)));
  rep.checks.push_back(info("orientable over " + field.name(), yes_no(cls.orientable)));
  rep.checks.push_back(
      info("reduced Betti numbers, degrees -1..d-1", vec_to_string(cls.betti)));
  for (const auto& n : cls.notes) rep.add_note(n);
  rep.finalize();
  return rep;
}

template <class F>
VerificationReport hvectors_report(const F& field, const SimplicialComplex& k,
                                   const Options& o) {
  VerificationReport rep;
  rep.theorem = "hvectors";
  rep.field = field.name();
  rep.trials = o.trials;
  Classification cls = classify(field, k);
  rep.checks.push_back(info("f-vector", vec_to_string(k.f_vector())));
  rep.checks.push_back(info("h-vector", vec_to_string(k.h_vector())));

  Rng rng(o.seed);
  auto cert = sample_certified_reduction(field, k, rng, o.trials);
  std::vector<long> direct = cert.reduction.dims();
  if (cls.buchsbaum) {
    std::vector<long> hp = schenzel_hilbert(field, k, cls);
    rep.checks.push_back(
        check_eq("h' from the Betti-corrected formula vs k(Delta) dims", hp, direct));
  } else {
    rep.checks.push_back(info("k(Delta) dims", vec_to_string(direct)));
    rep.add_note("h' skipped: " + (cls.notes.empty() ? std::string("not Buchsbaum")
                                                     : cls.notes.front()));
  }
  TruncatedQuotient<F> bar = gorenstein_quotient(std::move(cert.reduction));
  rep.checks.push_back(info("h'' (bar quotient dims)", vec_to_string(bar.dims())));
  rep.finalize();
  return rep;
}

template <class F>
VerificationReport lefschetz_report(const F& field, const SimplicialComplex& k,
                                    const Options& o, int i) {
  VerificationReport rep;
  rep.theorem = "lefschetz-ranks";
  rep.field = field.name();
  rep.trials = o.trials;
  charp_note(field, rep);

  Rng rng(o.seed);
  auto cert = sample_certified_reduction(field, k, rng, o.trials);
  TruncatedQuotient<F> bar = gorenstein_quotient(std::move(cert.reduction));
  int d = bar.d();

  if (i >= 0) {
    if (2 * i > d)
      throw std::invalid_argument("lefschetz: need 0 <= i <= d/2");
    long best = -1;
    bool mixed = false;
    std::optional<bool> first;
    for (int t = 0; t < o.trials; ++t) {
      Rng sub(rng.fork());
      LinearForm<F> omega = random_linear_form(field, k.n(), sub);
      LefschetzRankResult r = lefschetz_ranks(bar, omega, i);
      if (!first) first = r.isomorphism;
      else if (*first != r.isomorphism) mixed = true;
      best = std::max(best, r.rank);
    }
    if (mixed)
      rep.add_note("genericity warning: omega trials disagree on the iso verdict");
    long from = bar.dim(i), to = bar.dim(d - i);
    rep.checks.push_back(info(
        "generic omega^" + std::to_string(d - 2 * i) + ": bar_" +
            std::to_string(i) + " -> bar_" + std::to_string(d - i),
        "rank " + std::to_string(best) + ", dims " + std::to_string(from) +
            " -> " + std::to_string(to)));
    rep.checks.push_back(
        info("isomorphism", yes_no(best == from && best == to)));
  } else {
    std::vector<long> best(static_cast<std::size_t>(d), -1);
    bool mixed = false;
    std::optional<std::vector<bool>> first;
    for (int t = 0; t < o.trials; ++t) {
      Rng sub(rng.fork());
      LinearForm<F> omega = random_linear_form(field, k.n(), sub);
      auto prof = weak_lefschetz_profile(bar, omega);
      std::vector<bool> flags;
      for (const auto& s : prof) {
        best[static_cast<std::size_t>(s.i)] =
            std::max(best[static_cast<std::size_t>(s.i)], s.rank);
        flags.push_back(s.injective);
        flags.push_back(s.surjective);
      }
      if (!first) first = flags;
      else if (*first != flags) mixed = true;
    }
    if (mixed)
      rep.add_note("genericity warning: omega trials disagree across steps");
    for (int step = 0; step < d; ++step) {
      long rk = best[static_cast<std::size_t>(step)];
      long from = bar.dim(step), to = bar.dim(step + 1);
      std::string tag;
      if (rk == from) tag += " injective";
      if (rk == to) tag += " surjective";
      if (tag.empty()) tag = " neither injective nor surjective";
      rep.checks.push_back(info(
          "generic omega: bar_" + std::to_string(step) + " -> bar_" +
              std::to_string(step + 1),
          "rank " + std::to_string(rk) + ", dims " + std::to_string(from) +
              " -> " + std::to_string(to) + "," + tag));
    }
  }
  rep.finalize();
  return rep;
}

template <class F>
VerificationReport localcoh_report(const F& field, const SimplicialComplex& k,
                                   const Options& o, int lo, int hi) {
  VerificationReport rep;
  rep.theorem = "local-cohomology";
  rep.field = field.name();
  rep.trials = o.trials;
  LocalCohomologyTable t = local_cohomology(field, k, lo, hi);
  Classification cls = classify(field, k);
  for (int j = 0; j <= t.d; ++j) {
    std::vector<long> row;
    for (int m = lo; m <= hi; ++m) row.push_back(t.at(j, m));
    rep.checks.push_back(info("H^" + std::to_string(j) + " dims, m = " +
                                  std::to_string(lo) + ".." + std::to_string(hi),
                              vec_to_string(row)));
  }
  if (cls.buchsbaum) {
    rep.checks.push_back(check_flag("below-top modules vanish away from m=0",
                                    "collapsed", t.below_top_collapsed(),
                                    yes_no(t.below_top_collapsed())));
    std::vector<long> expect, observed;
    for (int j = 0; j < t.d; ++j) {
      expect.push_back(cls.betti[static_cast<std::size_t>(j)]);
      observed.push_back(t.at(j, 0));
    }
    rep.checks.push_back(
        check_eq("H^j_0 = b~_{j-1} for j < d", expect, observed));
  } else {
    rep.checks.push_back(info("below-top modules vanish away from m=0",
                              yes_no(t.below_top_collapsed())));
    rep.add_note("collapse not asserted: complex is not Buchsbaum");
  }
  rep.finalize();
  return rep;
}

VerificationReport mvector_report(const std::vector<long>& vals) {
  VerificationReport rep;
  rep.theorem = "m-vector";
  rep.complex_name = "-";
  rep.field = "-";
  rep.checks.push_back(info("sequence", vec_to_string(vals)));
  MVectorCheck c = mvector_check(vals);
  rep.checks.push_back(check_flag("Macaulay growth bounds", "M-vector", c.ok,
                                  c.ok ? "M-vector" : c.reason));
  rep.finalize();
  return rep;
}

template <class F>
VerificationReport mvector_consequences_report(const F& field,
                                               const SimplicialComplex& k,
                                               const Options& o, Rng& rng) {
  Classification cls = classify(field, k);
  auto cert = sample_certified_reduction(field, k, rng, o.trials);
  TruncatedQuotient<F> bar = gorenstein_quotient(std::move(cert.reduction));
  VerificationReport rep = g_mvector_consequences(bar, cls.betti);
  rep.field = field.name();
  rep.trials = o.trials;
  return rep;
}

// The per-file batch suite; certification or parse failures are reported by
// the caller, which isolates them per input file.
template <class F>
std::vector<VerificationReport> batch_suite(const F& field,
                                            const SimplicialComplex& k,
                                            const Options& o,
                                            std::uint64_t file_seed,
                                            const std::string& name) {
  std::vector<VerificationReport> reps;
  Rng rng(file_seed);
  Options local = o;
  local.seed = file_seed;
  reps.push_back(classification_report(field, k, local));
  reps.push_back(verify_socle(field, k, rng, o.trials));
  reps.push_back(verify_gorenstein(field, k, rng, o.trials));
  reps.push_back(verify_symmetry(field, k, rng, o.trials));
  reps.push_back(mvector_consequences_report(field, k, local, rng));
  reps.push_back(verify_link_isomorphism(field, k, rng, o.trials));
  if (k.d() >= 3) {
    reps.push_back(verify_gthm_special_case(field, k, rng, o.trials));
  } else {
    VerificationReport skip;
    skip.theorem = "gthm-special-case";
    skip.field = field.name();
    skip.trials = o.trials;
    skip.add_note("skipped: the special-case check needs d >= 3");
    skip.finalize("NOT-APPLICABLE");
    reps.push_back(skip);
  }
  for (auto& r : reps) {
    r.complex_name = name;
    r.seed = file_seed;
  }
  return reps;
}

int run_batch(const Options& o, const std::string& dir, const std::string& out) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) {
    std::cerr << "error: '" << dir << "' is not a directory\n";
    return 2;
  }
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".cplx")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no .cplx files in '" << dir << "'\n";
    return 2;
  }
  with_field(o.field_spec, [](const auto&) { return 0; });  // validate spec
  fs::create_directories(out);

  Rng master(o.seed);
  bool any_fail = false;
  nlohmann::json summary;
  summary["field"] = o.field_spec;
  summary["seed"] = o.seed;
  summary["trials"] = o.trials;
  summary["files"] = nlohmann::json::array();

  for (const fs::path& path : files) {
    std::uint64_t fseed = master.fork();
    std::string name = path.stem().string();
    nlohmann::json entry;
    entry["file"] = path.filename().string();
    entry["seed"] = fseed;

    nlohmann::json doc;
    doc["file"] = path.filename().string();
    doc["field"] = o.field_spec;
    doc["seed"] = fseed;
    doc["trials"] = o.trials;
    doc["reports"] = nlohmann::json::array();

    std::string worst = "PASS";
    try {
      SimplicialComplex k = load_complex(path.string());
      std::vector<VerificationReport> reps;
      with_field(o.field_spec, [&](const auto& field) {
        reps = batch_suite(field, k, o, fseed, name);
        return 0;
      });
      nlohmann::json verdicts = nlohmann::json::array();
      for (const auto& r : reps) {
        doc["reports"].push_back(nlohmann::json::parse(to_json(r)));
        verdicts.push_back(r.verdict);
        if (r.failed()) worst = "FAIL";
      }
      entry["verdicts"] = verdicts;
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      doc["error"] = e.what();
      worst = "ERROR";
    }
    if (worst != "PASS") any_fail = true;

    std::ofstream os(fs::path(out) / (name + ".json"));
    os << doc.dump(2) << "\n";
    summary["files"].push_back(entry);
    std::cout << path.filename().string() << ": " << worst << "\n";
  }

  std::ofstream os(fs::path(out) / "summary.json");
  os << summary.dump(2) << "\n";
  std::cout << "wrote " << files.size() << " report file(s) and summary.json to "
            << out << "\n";
  return any_fail ? 1 : 0;
}

std::pair<int, int> parse_window(const std::string& w) {
  std::size_t sep = w.find("..", 1);
  if (sep == std::string::npos)
    throw std::invalid_argument("bad window '" + w + "' (expected a..b)");
  std::size_t ua = 0, ub = 0;
  std::string lo_s = w.substr(0, sep), hi_s = w.substr(sep + 2);
  int lo = std::stoi(lo_s, &ua);
  int hi = std::stoi(hi_s, &ub);
  if (ua != lo_s.size() || ub != hi_s.size() || lo > hi)
    throw std::invalid_argument("bad window '" + w + "' (expected a..b)");
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face-ring verification toolkit"};
  app.require_subcommand(1);

  Options o;
  std::string path, dir;
  std::string out_dir = "facering-reports";
  std::string vertex_label, window;
  int lef_i = -1;
  std::vector<long> mvals;

  CLI::App* c_classify = app.add_subcommand("classify", "topological classification over the field");
  CLI::App* c_socle = app.add_subcommand("socle", "graded socle of the Artinian reduction vs the manifold prediction");
  CLI::App* c_gor = app.add_subcommand("gorenstein", "socle of the quotient by the below-top socle");
  CLI::App* c_sym = app.add_subcommand("symmetry", "symmetry of the h''-vector");
  CLI::App* c_lef = app.add_subcommand("lefschetz", "generic Lefschetz ranks on the bar quotient");
  CLI::App* c_gcheck = app.add_subcommand("gcheck", "special-case g-theorem check on qualifying faces");
  CLI::App* c_linkiso = app.add_subcommand("linkiso", "link reduction vs the principal ideal (x_v)");
  CLI::App* c_localcoh = app.add_subcommand("localcoh", "graded local cohomology table");
  CLI::App* c_mvector = app.add_subcommand("mvector", "Macaulay growth test for a sequence");
  CLI::App* c_hvec = app.add_subcommand("hvectors", "f/h/h'/h'' table");
  CLI::App* c_conn = app.add_subcommand("connection", "link surjectivity premise vs weak Lefschetz conclusion");
  CLI::App* c_batch = app.add_subcommand("batch", "run the verification suite on every .cplx in a directory");

  for (CLI::App* c : {c_classify, c_socle, c_gor, c_sym, c_lef, c_gcheck,
                      c_linkiso, c_localcoh, c_hvec, c_conn}) {
    c->add_option("complex", path, "path to a .cplx file")->required();
    add_common(c, o);
  }
  c_lef->add_option("i", lef_i, "power index: check omega^(d-2i): bar_i -> bar_{d-i}");
  c_linkiso->add_option("vertex", vertex_label, "restrict to one vertex label");
  c_localcoh->add_option("--window", window, "internal degree window a..b (default -d-2..0)");
  c_mvector->add_option("values", mvals, "sequence entries")->required()->expected(-1);
  add_common(c_mvector, o);
  c_batch->add_option("dir", dir, "directory of .cplx files")->required();
  c_batch->add_option("--out", out_dir, "output directory for JSON reports");
  add_common(c_batch, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_mvector)) {
      VerificationReport rep = mvector_report(mvals);
      rep.seed = o.seed;
      std::cout << (o.json ? to_json(rep) : to_text(rep));
      return rep.failed() ? 1 : 0;
    }
    if (app.got_subcommand(c_batch)) return run_batch(o, dir, out_dir);

    SimplicialComplex k = load_complex(path);
    std::string name = stem_of(path);
    return with_field(o.field_spec, [&](const auto& field) -> int {
      Rng rng(o.seed);
      if (app.got_subcommand(c_classify))
        return emit(classification_report(field, k, o), o, name);
      if (app.got_subcommand(c_socle))
        return emit(verify_socle(field, k, rng, o.trials), o, name);
      if (app.got_subcommand(c_gor))
        return emit(verify_gorenstein(field, k, rng, o.trials), o, name);
      if (app.got_subcommand(c_sym))
        return emit(verify_symmetry(field, k, rng, o.trials), o, name);
      if (app.got_subcommand(c_lef))
        return emit(lefschetz_report(field, k, o, lef_i), o, name);
      if (app.got_subcommand(c_gcheck)) {
        VerificationReport rep = verify_gthm_special_case(field, k, rng, o.trials);
        charp_note(field, rep);
        return emit(std::move(rep), o, name);
      }
      if (app.got_subcommand(c_linkiso)) {
        std::optional<int> v;
        if (!vertex_label.empty()) {
          int id = k.id_of(vertex_label);
          if (id < 0)
            throw std::invalid_argument("no vertex labeled '" + vertex_label + "'");
          v = id;
        }
        return emit(verify_link_isomorphism(field, k, rng, o.trials, v), o, name);
      }
      if (app.got_subcommand(c_localcoh)) {
        int lo = -k.d() - 2, hi = 0;
        if (!window.empty()) std::tie(lo, hi) = parse_window(window);
        return emit(localcoh_report(field, k, o, lo, hi), o, name);
      }
      if (app.got_subcommand(c_conn)) {
        VerificationReport rep = verify_connection(field, k, rng, o.trials);
        charp_note(field, rep);
        return emit(std::move(rep), o, name);
      }
      if (app.got_subcommand(c_hvec))
        return emit(hvectors_report(field, k, o), o, name);
      throw std::logic_error("unhandled subcommand");
    });
  } catch (const CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
