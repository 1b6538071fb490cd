#include "orthinv/manifest.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <random>

#include "orthinv/poly_text.hpp"
#include "orthinv/solver.hpp"

namespace orthinv {

namespace {

using nlohmann::ordered_json;

struct CheckOutcome {
  std::string expected;
  std::string observed;
  bool pass = false;
};

Family family_from_string(const std::string& s) {
  if (s == "g") return Family::G;
  if (s == "h") return Family::H;
  if (s == "f") return Family::F;
  throw InvalidSpecError("unknown family '" + s + "' (expected g, h or f)");
}

class GridRunner {
 public:
  explicit GridRunner(const GridConfig& config)
      : config_(config), solver_(SolverConfig{config.ceiling}) {}

  std::vector<CheckRecord> run() {
    if (config_.default_checks)
      add_default_grid();
    else
      for (const auto& spec : config_.families) add_family_set("", spec);

    std::sort(records_.begin(), records_.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return std::move(records_);
  }

 private:
  GridConfig config_;
  SolverCache solver_;
  std::map<std::tuple<Family, int, int>, Polynomial<Int>> int_cache_;
  std::vector<CheckRecord> records_;

  const Polynomial<Int>& family_int(const FamilySpec& spec) {
    auto key = std::make_tuple(spec.family, spec.n, spec.m);
    auto it = int_cache_.find(key);
    if (it == int_cache_.end()) it = int_cache_.emplace(key, construct_int(spec)).first;
    return it->second;
  }

  Polynomial<Gf2> family_mod2(const FamilySpec& spec) { return reduce_mod2(family_int(spec)); }

  void check_ceiling(int n, int m) {
    std::size_t count = 1;
    for (int i = 0; i < m; ++i) {
      count *= static_cast<std::size_t>(n);
      if (count > config_.ceiling)
        throw TooLargeError("monomial space " + std::to_string(n) + "^" + std::to_string(m) +
                            " exceeds ceiling " + std::to_string(config_.ceiling));
    }
  }

  void add(const std::string& id, ordered_json inputs,
           const std::function<CheckOutcome()>& body) {
    CheckRecord rec;
    rec.id = id;
    rec.inputs = std::move(inputs);
    auto start = std::chrono::steady_clock::now();
    try {
      CheckOutcome out = body();
      rec.expected = out.expected;
      rec.observed = out.observed;
      rec.status = out.pass ? "pass" : "fail";
    } catch (const TooLargeError& e) {
      rec.expected = "within ceiling";
      rec.observed = e.what();
      rec.status = "skipped(out-of-range)";
    } catch (const Error& e) {
      rec.expected = "no error";
      rec.observed = e.what();
      rec.status = "fail";
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    records_.push_back(std::move(rec));
  }

  static ordered_json inputs_of(const FamilySpec& spec) {
    return ordered_json{{"family", family_name(spec.family)}, {"n", spec.n}, {"m", spec.m}};
  }

  static std::string instance_tag(const FamilySpec& spec) {
    return family_name(spec.family) + "." + std::to_string(spec.n) + "x" + std::to_string(spec.m);
  }

  // --- per-family checks -------------------------------------------------

  void add_divisibility(const std::string& prefix, const FamilySpec& spec) {
    add(prefix + instance_tag(spec) + ".divisibility", inputs_of(spec), [this, spec] {
      check_ceiling(spec.n, spec.m);
      family_int(spec);  // NonDivisibleError would escape as a failure
      return CheckOutcome{"exact", "exact", true};
    });
  }

  void add_oracle_equality(const std::string& prefix, const FamilySpec& spec) {
    add(prefix + instance_tag(spec) + ".oracle.int", inputs_of(spec), [this, spec] {
      check_ceiling(spec.n, spec.m);
      bool eq = family_int(spec) == construct_combinatorial_int(spec);
      return CheckOutcome{"equal", eq ? "equal" : "different", eq};
    });
    add(prefix + instance_tag(spec) + ".oracle.mod2", inputs_of(spec), [this, spec] {
      check_ceiling(spec.n, spec.m);
      bool eq = family_mod2(spec) == construct_combinatorial_mod2(spec);
      return CheckOutcome{"equal", eq ? "equal" : "different", eq};
    });
  }

  static std::string verdict_summary(const std::vector<std::pair<std::string, Verdict>>& vs) {
    std::string bad;
    for (const auto& [name, v] : vs)
      if (v != Verdict::Invariant) bad += (bad.empty() ? "" : ", ") + name + "=" + verdict_name(v);
    return bad.empty() ? "all-invariant" : bad;
  }

  void add_invariance(const std::string& prefix, const FamilySpec& spec) {
    const Group group = spec.family == Family::G ? Group::O : Group::SO;
    auto in = inputs_of(spec);
    in["group"] = group_name(group);
    add(prefix + instance_tag(spec) + ".invariance.char2", in, [this, spec, group] {
      check_ceiling(spec.n, spec.m);
      const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
      auto verdicts = check_invariance(family_mod2(spec), generator_family_gf2(space, group));
      std::string obs = verdict_summary(verdicts);
      return CheckOutcome{"all-invariant", obs, obs == "all-invariant"};
    });
    add(prefix + instance_tag(spec) + ".invariance.char0", in, [this, spec, group] {
      check_ceiling(spec.n, spec.m);
      const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
      auto verdicts = check_invariance(family_int(spec), generator_family_int(space, group));
      std::string obs = verdict_summary(verdicts);
      return CheckOutcome{"all-invariant", obs, obs == "all-invariant"};
    });
  }

  void add_roundtrip(const std::string& prefix, const FamilySpec& spec) {
    add(prefix + instance_tag(spec) + ".roundtrip", inputs_of(spec), [this, spec] {
      check_ceiling(spec.n, spec.m);
      bool ok_int = parse_polynomial<Int>(serialize(family_int(spec))) == family_int(spec);
      bool ok_mod2 = parse_polynomial<Gf2>(serialize(family_mod2(spec))) == family_mod2(spec);
      bool ok = ok_int && ok_mod2;
      return CheckOutcome{"identity", ok ? "identity" : "mismatch", ok};
    });
  }

  void add_family_set(const std::string& prefix, const FamilySpec& spec) {
    add_divisibility(prefix, spec);
    add_oracle_equality(prefix, spec);
    add_invariance(prefix, spec);
    add_roundtrip(prefix, spec);
  }

  // --- fixed checks of the default grid -----------------------------------

  void add_gh_identity(int n, int m) {
    add("c3." + std::to_string(n) + "x" + std::to_string(m) + ".gh-identity",
        ordered_json{{"n", n}, {"m", m}}, [this, n, m] {
          bool eq = family_mod2({Family::G, n, m}) == family_mod2({Family::H, n, m});
          return CheckOutcome{"g=h", eq ? "g=h" : "different", eq};
        });
  }

  void add_pfaffian_identities() {
    // Checkerboard entries sgn(j-i) for odd j-i: Pf = 2^(mu-1).
    for (int mu = 1; mu <= 3; ++mu) {
      add("c6.pf.checkerboard.mu" + std::to_string(mu), ordered_json{{"mu", mu}}, [mu] {
        SkewPolyMatrix<Int> mat(2 * mu);
        for (int i = 0; i < 2 * mu; ++i)
          for (int j = i + 1; j < 2 * mu; ++j)
            if ((j - i) % 2 == 1) mat.set_upper(i, j, Polynomial<Int>::constant(Int(1)));
        Int expected = 1;
        expected <<= (mu - 1);
        std::string obs = serialize(pfaffian(mat));
        return CheckOutcome{expected.get_str(), obs, obs == expected.get_str()};
      });
      add("c6.pf.doubled.mu" + std::to_string(mu), ordered_json{{"mu", mu}}, [mu] {
        SkewPolyMatrix<Int> mat(2 * mu);
        for (int i = 0; i < 2 * mu; ++i)
          for (int j = i + 1; j < 2 * mu; ++j)
            if ((j - i) % 2 == 1) mat.set_upper(i, j, Polynomial<Int>::constant(Int(2)));
        Int expected = 1;
        expected <<= mu;
        std::string obs = serialize(pfaffian(mat));
        return CheckOutcome{expected.get_str(), obs, obs == expected.get_str()};
      });
    }

    add("c6.pf.square-is-det", ordered_json{{"sizes", "2..6"}, {"seed", 198}}, [] {
      std::mt19937_64 rng(198);
      std::uniform_int_distribution<int> coef(-3, 3);
      std::uniform_int_distribution<int> pick(1, 3);
      for (int size = 2; size <= 6; size += 2) {
        for (int trial = 0; trial < 3; ++trial) {
          SkewPolyMatrix<Int> mat(size);
          for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
              Polynomial<Int> p;
              for (int t = 0; t < 2; ++t)
                p.add_term(monomial_var(Variable::x(pick(rng), pick(rng))), Int(coef(rng)));
              mat.set_upper(i, j, p);
            }
          Polynomial<Int> pf = pfaffian(mat);
          if (pf * pf != skew_matrix_det(mat))
            return CheckOutcome{"Pf^2 = det", "mismatch at size " + std::to_string(size), false};
        }
      }
      return CheckOutcome{"Pf^2 = det", "Pf^2 = det", true};
    });
  }

  void add_multiplicity_checks() {
    // Odd-n multiplicity in x,y equals 2 nu.
    for (auto [n, m] : {std::pair{3, 3}, {3, 4}, {3, 5}, {5, 5}}) {
      const Family fam = (m % 2 == 0) ? Family::G : Family::H;
      FamilySpec spec{fam, n, m};
      add("c7.mult-xy." + instance_tag(spec), inputs_of(spec), [this, spec] {
        int expected = 2 * spec.nu();
        int got = multiplicity_in_xy(family_mod2(spec));
        return CheckOutcome{std::to_string(expected), std::to_string(got), got == expected};
      });
    }
    // Even-n multiplicity in s equals nu, witness monomial has coefficient 1.
    for (auto [n, m] : {std::pair{2, 4}, {2, 6}, {4, 6}}) {
      FamilySpec spec{Family::G, n, m};
      add("c7.mult-s." + instance_tag(spec), inputs_of(spec), [this, spec] {
        const int nu = spec.nu();
        int got = multiplicity_in_s(family_mod2(spec));
        // s_1^(1) .. s_nu^(nu) t_1^(nu+1) .. t_nu^(2nu) t_1^(2nu+1) .. t_1^(m)
        std::vector<VarPow> factors;
        for (int r = 1; r <= nu; ++r) factors.push_back(VarPow{Variable::s(r, r).key(), 1});
        for (int r = 1; r <= nu; ++r) factors.push_back(VarPow{Variable::t(r, nu + r).key(), 1});
        for (int i = 2 * nu + 1; i <= spec.m; ++i)
          factors.push_back(VarPow{Variable::t(1, i).key(), 1});
        Gf2 coeff = to_ts_coordinates(family_mod2(spec))
                        .coefficient_of(intern_monomial(std::move(factors)));
        std::string obs =
            "mult=" + std::to_string(got) + ",witness=" + std::string(coeff.v ? "1" : "0");
        std::string expected = "mult=" + std::to_string(nu) + ",witness=1";
        return CheckOutcome{expected, obs, obs == expected};
      });
    }
  }

  void add_lemma_audits() {
    auto audit_record = [this](int n, int m, Group group) {
      add("c8.audit." + std::string(n % 2 == 1 ? "xy" : "s") + "." + std::to_string(n) + "x" +
              std::to_string(m),
          ordered_json{{"n", n}, {"m", m}, {"group", group_name(group)}}, [this, n, m, group] {
            LemmaAudit a = solver_.lemma_bound_audit(n, m, group);
            std::string obs = "dim=" + std::to_string(a.dim) + ",min=" +
                              (a.min_achieved == kInfinityMult ? std::string("inf")
                                                               : std::to_string(a.min_achieved));
            return CheckOutcome{"multiplicity >= " + std::to_string(a.bound), obs, a.pass};
          });
    };
    for (int m = 1; m <= 5; ++m) audit_record(3, m, Group::SO);
    for (int m = 1; m <= 8; ++m) audit_record(2, m, Group::O);
    for (int m = 1; m <= 6; ++m) audit_record(4, m, Group::O);
  }

  void add_certificates() {
    const std::vector<FamilySpec> targets = {
        {Family::G, 2, 4}, {Family::G, 2, 6}, {Family::G, 2, 8},
        {Family::H, 3, 3}, {Family::G, 3, 4}, {Family::H, 3, 5},
        {Family::G, 4, 6}, {Family::F, 4, 4}, {Family::F, 4, 6},
    };
    for (const auto& spec : targets) {
      add("c9.cert." + instance_tag(spec), inputs_of(spec), [this, spec] {
        Certificate cert = solver_.indecomposability_certificate(spec);
        std::string obs = std::string("member=") + (cert.member ? "true" : "false") +
                          ",dim_inv=" + std::to_string(cert.dim_invariant) +
                          ",dim_dec=" + std::to_string(cert.dim_decomposable);
        return CheckOutcome{"member=false", obs, !cert.member && cert.in_theorem_range};
      });
    }

    add("c9.decomposable-dim.2x4", ordered_json{{"n", 2}, {"m", 4}}, [this] {
      std::size_t dim = solver_.decomposable_subspace(2, 4, Group::O).rank();
      return CheckOutcome{"2", std::to_string(dim), dim == 2};
    });

    add("c9.matching-relation.2x4", ordered_json{{"n", 2}, {"m", 4}}, [] {
      const QuadraticSpace space = QuadraticSpace::of_dim(2);
      Polynomial<Int> sum = bilinear_form(space, 1, 2) * bilinear_form(space, 3, 4) +
                            bilinear_form(space, 1, 3) * bilinear_form(space, 2, 4) +
                            bilinear_form(space, 1, 4) * bilinear_form(space, 2, 3);
      bool zero = reduce_mod2(sum).is_zero();
      return CheckOutcome{"0", zero ? "0" : "nonzero", zero};
    });
  }

  void add_vanishing_checks() {
    auto dim_record = [this](const std::string& id, int n, int m, std::size_t expected) {
      add(id, ordered_json{{"n", n}, {"m", m}, {"group", "SO"}}, [this, n, m, expected] {
        std::size_t dim = solver_.invariant_basis(n, m, Group::SO).dim();
        return CheckOutcome{"dim=" + std::to_string(expected), "dim=" + std::to_string(dim),
                            dim == expected};
      });
    };
    dim_record("c10.vanish.so.4x3", 4, 3, 0);
    dim_record("c10.vanish.so.2x3", 2, 3, 0);
    for (int n = 2; n <= 5; ++n)
      dim_record("c10.vanish.deg1." + std::to_string(n), n, 1, 0);

    for (auto [n, m] : {std::pair{4, 2}, {4, 4}, {5, 2}, {5, 4}}) {
      add("c10.matching-span." + std::to_string(n) + "x" + std::to_string(m),
          ordered_json{{"n", n}, {"m", m}, {"group", "O"}}, [this, n, m] {
            bool eq = solver_.matching_span_equals_invariants(n, m);
            return CheckOutcome{"equal", eq ? "equal" : "different", eq};
          });
    }
  }

  void add_image_checks() {
    for (int m : {4, 6}) {
      add("c11.image.4x" + std::to_string(m), ordered_json{{"n", 4}, {"m", m}}, [this, m] {
        const QuadraticSpace space = QuadraticSpace::of_dim(4);
        Polynomial<Gf2> image = substitute_z_for_top_pair(family_mod2({Family::F, 4, m}), space);
        bool eq = image == family_mod2({Family::G, 3, m});
        return CheckOutcome{"image=g", eq ? "image=g" : "different", eq};
      });
    }
  }

  void add_default_grid() {
    const std::vector<std::pair<int, int>> c1 = {{2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 2}, {3, 4},
                                                 {3, 6}, {4, 4}, {4, 6}, {5, 4}, {5, 6}};
    for (auto [n, m] : c1) {
      FamilySpec spec{Family::G, n, m};
      add_divisibility("c1.", spec);
      add_oracle_equality("c1.", spec);
      add_invariance("c5.", spec);
      add_roundtrip("c12.", spec);
    }

    const std::vector<std::pair<int, int>> c2 = {{3, 3}, {3, 5}, {3, 7},
                                                 {4, 4}, {4, 6}, {5, 5}};
    for (auto [n, m] : c2) {
      FamilySpec spec{Family::H, n, m};
      add_divisibility("c2.", spec);
      add_oracle_equality("c2.", spec);
      add_invariance("c5.", spec);
      add_roundtrip("c12.", spec);
    }

    add_gh_identity(4, 4);
    add_gh_identity(4, 6);

    for (int m : {4, 6}) {
      FamilySpec spec{Family::F, 4, m};
      add_divisibility("c4.", spec);
      add_oracle_equality("c4.", spec);
      add_invariance("c5.", spec);
      add_roundtrip("c12.", spec);
    }
    add("c4.f.4x4.monomial-count", ordered_json{{"family", "f"}, {"n", 4}, {"m", 4}}, [this] {
      std::size_t count = family_mod2({Family::F, 4, 4}).num_terms();
      return CheckOutcome{"16", std::to_string(count), count == 16};
    });

    // The determinant factor makes the integer lift of h flip sign under the
    // non-special coordinate swap.
    add("c5.htilde.3x3.antiswap", ordered_json{{"family", "h"}, {"n", 3}, {"m", 3}}, [this] {
      const QuadraticSpace space = QuadraticSpace::of_dim(3);
      for (const auto& gen : generator_family_int(space, Group::O)) {
        if (gen.component != Component::NonSpecial) continue;
        Verdict v = check_invariance(family_int({Family::H, 3, 3}), gen);
        return CheckOutcome{"anti-invariant", verdict_name(v), v == Verdict::AntiInvariant};
      }
      return CheckOutcome{"anti-invariant", "no non-special generator", false};
    });

    add_pfaffian_identities();
    add_multiplicity_checks();
    add_lemma_audits();
    add_certificates();
    add_vanishing_checks();
    add_image_checks();
  }
};

std::string iso8601_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

GridConfig load_grid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grid config: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid grid config " + path + ": " + e.what());
  }
  GridConfig config;
  config.default_checks = false;
  if (doc.contains("ceiling")) config.ceiling = doc["ceiling"].get<std::size_t>();
  if (doc.contains("families")) {
    for (const auto& entry : doc["families"]) {
      FamilySpec spec;
      spec.family = family_from_string(entry.at("family").get<std::string>());
      spec.n = entry.at("n").get<int>();
      spec.m = entry.at("m").get<int>();
      config.families.push_back(spec);
    }
  }
  return config;
}

void apply_ceiling_env(GridConfig& config) {
  if (const char* env = std::getenv("INVARIANT_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) config.ceiling = static_cast<std::size_t>(v);
  }
}

std::vector<CheckRecord> run_grid(const GridConfig& config) {
  GridRunner runner(config);
  return runner.run();
}

bool all_records_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status == "fail") return false;
  return true;
}

nlohmann::ordered_json manifest_json(const std::vector<CheckRecord>& records,
                                     const GridConfig& config, const std::string& grid_name) {
  ordered_json wall;
  double total = 0.0;
  for (const auto& r : records) {
    wall[r.id] = r.wall_ms;
    total += r.wall_ms;
  }

  ordered_json header{{"tool", kToolName},
                      {"version", kToolVersion},
                      {"generated_at", iso8601_now()},
                      {"wall_ms_total", total},
                      {"wall_ms", std::move(wall)}};

  ordered_json entries = ordered_json::array();
  for (const auto& spec : config.families)
    entries.push_back(ordered_json{
        {"family", family_name(spec.family)}, {"n", spec.n}, {"m", spec.m}});

  ordered_json cfg{{"grid", grid_name},
                   {"ceiling", config.ceiling},
                   {"entries", std::move(entries)}};

  ordered_json recs = ordered_json::array();
  for (const auto& r : records)
    recs.push_back(ordered_json{{"id", r.id},
                                {"inputs", r.inputs},
                                {"expected", r.expected},
                                {"observed", r.observed},
                                {"status", r.status}});

  return ordered_json{
      {"header", std::move(header)}, {"config", std::move(cfg)}, {"records", std::move(recs)}};
}

std::string manifest_stable_text(const nlohmann::ordered_json& manifest) {
  nlohmann::ordered_json copy = manifest;
  copy.erase("header");
  return copy.dump(2);
}

}  // namespace orthinv
