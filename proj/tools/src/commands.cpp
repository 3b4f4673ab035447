#include "zetahess_cli/commands.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "pool.hpp"
#include "zetahess/error.hpp"
#include "zetahess/formcombi.hpp"
#include "zetahess/sampling.hpp"

namespace zetahess::cli {

using zetahess::to_string;

namespace {

void flatten(VerificationReport& rep, std::vector<std::vector<ReportRow>>&& parts) {
  for (auto& part : parts)
    for (auto& row : part) rep.rows.push_back(std::move(row));
  rep.sort();
}

PerturbH draw_general(Sampler& s, int n) {
  for (;;) {
    auto h = s.perturbation(n);
    if (!h.is_diagonal()) return h;
  }
}

std::uint64_t op_code(OperatorKind op) { return op == OperatorKind::Bochner ? 1 : 2; }

// Restricted growth strings of length m with at most `blocks` blocks.
void coincidence_patterns(int m, int blocks, std::vector<int>& cur, int used,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == m) {
    visit(cur);
    return;
  }
  for (int b = 0; b <= used && b < blocks; ++b) {
    cur.push_back(b);
    coincidence_patterns(m, blocks, cur, std::max(used, b + 1), visit);
    cur.pop_back();
  }
}

}  // namespace

VerificationReport verify_theorem1(const VerifyOptions& opt, std::uint64_t seed, int jobs) {
  if (opt.n_min < 2 || opt.n_max > 12 || opt.n_min > opt.n_max)
    throw UsageError("need 2 <= n-min <= n-max <= 12");
  if (opt.trials < 1) throw UsageError("need trials >= 1");
  if (opt.operators.empty()) throw UsageError("no operator selected");

  struct Task {
    OperatorKind op;
    CaseKey key;
  };
  std::vector<Task> tasks;
  for (auto op : opt.operators)
    for (int n = opt.n_min; n <= opt.n_max; ++n)
      for (int p = 0; p <= n; ++p)
        for (int t = 0; t < opt.trials; ++t) {
          const auto case_seed = derive_seed(seed, {op_code(op), std::uint64_t(n), std::uint64_t(p), std::uint64_t(t)});
          tasks.push_back({op, {to_string(op), n, p, t, case_seed}});
        }

  auto parts = run_pool(tasks, jobs, [&](const Task& task) {
    const auto& k = task.key;
    Sampler s(k.seed);
    const PerturbH h = opt.general_h ? draw_general(s, k.n) : s.perturbation(k.n, true);
    const Covector xi = s.covector(k.n);
    const auto vt = variation_tensor(task.op, k.n, k.p);
    const SPoly d = direct_symbol(vt, h, xi).value;
    const SPoly g = grouped_symbol(vt, h, xi).value;
    const SPoly t = theorem1_reduced(task.op, k.n, k.p, h, xi).value;
    return std::vector<ReportRow>{equality_row(k, "direct=grouped", d, g),
                                  equality_row(k, "grouped=theorem1", g, t)};
  });

  VerificationReport rep{"verify-theorem1", seed, {}};
  flatten(rep, std::move(parts));
  return rep;
}

PatternSweep sweep_patterns(int n, int p) {
  PatternSweep out;
  constexpr std::array kinds{FactorKind::Chi, FactorKind::ChiComplement, FactorKind::Sgn};
  for (int m = 1; m <= 4; ++m) {
    int combos = 1;
    for (int i = 0; i < m; ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      std::vector<FactorKind> f;
      for (int i = 0, c = code; i < m; ++i, c /= 3) f.push_back(kinds[static_cast<std::size_t>(c % 3)]);
      const FactorPattern pattern(f);
      std::vector<int> cur;
      coincidence_patterns(m, n, cur, 0, [&](const std::vector<int>& fixed) {
        ++out.total;
        if (identity_sum(n, p, pattern, fixed).agrees()) ++out.agreeing;
      });
    }
  }
  return out;
}

VerificationReport identities(int n_max, std::uint64_t seed, int jobs) {
  if (n_max < 2 || n_max > 12) throw UsageError("need 2 <= n-max <= 12");

  enum class Kind { Subsets, Gauge, Torsion, Projector };
  struct Task {
    Kind kind;
    OperatorKind op;
    CaseKey key;
  };
  std::vector<Task> tasks;
  for (int n = 2; n <= n_max; ++n)
    for (int p = 0; p <= n; ++p) tasks.push_back({Kind::Subsets, OperatorKind::Bochner, {"subsets", n, p, 0, 0}});
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham}) {
    for (int n = 2; n <= std::min(n_max, 6); ++n)
      for (int p = 0; p <= n; ++p)
        for (int t = 0; t < 3; ++t)
          tasks.push_back({Kind::Gauge, op,
                           {to_string(op), n, p, t, derive_seed(seed, {10 + op_code(op), std::uint64_t(n), std::uint64_t(p), std::uint64_t(t)})}});
    for (int n = 2; n <= std::min(n_max, 7); ++n)
      tasks.push_back({Kind::Torsion, op, {to_string(op), n, 0, 0, derive_seed(seed, {20 + op_code(op), std::uint64_t(n)})}});
  }
  for (int n = 2; n <= std::min(n_max, 6); ++n)
    tasks.push_back({Kind::Projector, OperatorKind::Bochner, {"projector", n, 0, 0, derive_seed(seed, {30, std::uint64_t(n)})}});

  auto parts = run_pool(tasks, jobs, [](const Task& task) {
    const auto& k = task.key;
    std::vector<ReportRow> rows;
    switch (task.kind) {
      case Kind::Subsets: {
        auto add = [&](const std::string& name, const FactorPattern& pat, const std::vector<int>& fixed) {
          const auto r = identity_sum(k.n, k.p, pat, fixed);
          rows.push_back(equality_row(k, name, r.brute, r.closed));
        };
        add("chi*chi' distinct", {FactorKind::Chi, FactorKind::ChiComplement}, {0, 1});
        add("chi*chi' coincident", {FactorKind::Chi, FactorKind::ChiComplement}, {0, 0});
        add("sgn*sgn distinct", {FactorKind::Sgn, FactorKind::Sgn}, {0, 1});
        add("sgn*sgn coincident", {FactorKind::Sgn, FactorKind::Sgn}, {0, 0});
        if (k.n >= 4) add("sgn^4 free term", FactorPattern::repeated(FactorKind::Sgn, 4), {0, 1, 2, 3});
        const auto sw = sweep_patterns(k.n, k.p);
        rows.push_back(equality_row(k, "all patterns (agreeing of total)", Rational(static_cast<long>(sw.agreeing)),
                                    Rational(static_cast<long>(sw.total))));
        break;
      }
      case Kind::Gauge: {
        Sampler s(k.seed);
        const auto kk = s.perturbation(k.n);
        const auto xi = s.covector(k.n);
        const auto eta = s.covector(k.n);
        rows.push_back(equality_row(k, "gauge kernel", gauge_kernel_check(task.op, k.n, k.p, kk, xi, eta), SPoly()));
        break;
      }
      case Kind::Torsion: {
        Sampler s(k.seed);
        const auto h = s.perturbation(k.n);
        const auto xi = s.covector(k.n);
        for (int deg = 0; deg <= 2; ++deg) {
          const std::string name = "torsion k=" + std::to_string(deg);
          const SPoly v = torsion_sum(task.op, k.n, deg, h, xi);
          // The alternating sum is only claimed for k <= n - 3.
          rows.push_back(deg <= k.n - 3 ? equality_row(k, name, v, SPoly()) : reported_row(k, name, v, SPoly()));
          // Analytic torsion itself: de Rham, k = 1, s = 0.
          if (deg == 1 && task.op == OperatorKind::DeRham)
            rows.push_back(equality_row(k, "torsion k=1 at s=0", SPoly(v.evaluate(Rational(-k.n, 2))), SPoly()));
        }
        break;
      }
      case Kind::Projector: {
        Sampler s(k.seed);
        long draws = 0, t2_bad = 0, cs_bad = 0, reversed_bad = 0;
        while (draws < 100) {
          const auto xi = s.covector(k.n);
          const auto r = projector_inequalities(s.perturbation(k.n), xi);
          if (r.gauge) continue;
          ++draws;
          if (!r.t2_positive || !r.t1sq_nonnegative) ++t2_bad;
          if (!r.cauchy_schwarz) ++cs_bad;
          if (!r.reversed_reading) ++reversed_bad;
        }
        rows.push_back(equality_row(k, "t2 > 0 violations", Rational(t2_bad), Rational(0)));
        rows.push_back(equality_row(k, "cauchy-schwarz violations", Rational(cs_bad), Rational(0)));
        rows.push_back(reported_row(k, "printed direction violations", Rational(reversed_bad), Rational(0)));
        const auto id = projector_inequalities(PerturbH::identity(k.n), Covector::unit(k.n, 0));
        rows.push_back(reported_row(k, "printed direction at identity: t2/(n-1) vs t1sq",
                                    SPoly(id.traces.t2 / Rational(k.n - 1)),
                                    SPoly(id.traces.t1sq)));
        break;
      }
    }
    return rows;
  });

  VerificationReport rep{"identities", seed, {}};
  flatten(rep, std::move(parts));
  return rep;
}

std::string ftable(OperatorKind op, int n, Format format) {
  if (n < 2 || n > kMaxDimension) throw UsageError("need 2 <= n <= " + std::to_string(kMaxDimension));
  std::ostringstream os;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (format == Format::Text) os << to_string(op) << " n=" << n << "  (f1, f2 in S = s - n/2)\n";
  if (format == Format::Csv)
    os << "p,f1,f2,dstar_d_alt_f1,dstar_d_alt_f2,dstar_d_closed_f1,dstar_d_closed_f2,dstar_d_scale\n";
  for (int p = 0; p <= n; ++p) {
    const FPair f = closed_form_fpair(op, n, p);
    const DStarD d = dstar_d_fpair(n, p);
    const std::string scale = d.scale ? to_string(*d.scale) : "";
    const bool traces = d.alt_trace_sum == d.closed_trace_sum;
    switch (format) {
      case Format::Text:
        os << "p=" << p << ": " << f.f1 << ", " << f.f2 << '\n'
           << "    d*d alt=(" << d.alt_sum.f1 << ", " << d.alt_sum.f2 << ") closed=(" << d.closed.f1 << ", "
           << d.closed.f2 << ") scale=" << (d.scale ? scale : "none") << (traces ? "" : " trace-mismatch") << '\n';
        break;
      case Format::Csv:
        os << p << ',' << f.f1 << ',' << f.f2 << ',' << d.alt_sum.f1 << ',' << d.alt_sum.f2 << ',' << d.closed.f1
           << ',' << d.closed.f2 << ',' << scale << '\n';
        break;
      case Format::Json: {
        nlohmann::ordered_json row;
        row["case"] = {{"operator", to_string(op)}, {"n", n}, {"p", p}};
        row["f1"] = f.f1.to_string();
        row["f2"] = f.f2.to_string();
        nlohmann::ordered_json dd;
        dd["alt_sum"] = {{"f1", d.alt_sum.f1.to_string()}, {"f2", d.alt_sum.f2.to_string()}};
        dd["closed"] = {{"f1", d.closed.f1.to_string()}, {"f2", d.closed.f2.to_string()}};
        dd["scale"] = d.scale ? nlohmann::ordered_json(scale) : nlohmann::ordered_json(nullptr);
        dd["proportional"] = d.proportional;
        dd["trace_sum_match"] = traces;
        row["dstar_d"] = std::move(dd);
        rows.push_back(std::move(row));
        break;
      }
    }
  }
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["operator"] = to_string(op);
    j["n"] = n;
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  return os.str();
}

ScanOperator parse_scan_operator(const std::string& name) {
  for (auto op : {ScanOperator::Bochner, ScanOperator::DeRham, ScanOperator::DStarD, ScanOperator::DDStar})
    if (to_string(op) == name) return op;
  throw UsageError("unknown operator: " + name);
}

std::string classify(ScanOperator op, int n, int p, const Rational& s, int k, Format format) {
  if (n < 3 || n > kMaxDimension) throw UsageError("need 3 <= n <= " + std::to_string(kMaxDimension));
  if (p < 0 || p > n) throw UsageError("need 0 <= p <= n");
  if (k < 0) throw UsageError("need k >= 0");
  if (!(s < Rational(n, 2) - 1)) throw UsageError("need s < n/2 - 1");
  const FPair f = scan_fpair(op, n, p);
  Classification cls;
  try {
    cls = theorem2_classify(f, n, s, k);
  } catch (const ParameterOutOfRange& e) {
    throw UsageError(e.what());
  }
  const Rational S = s - Rational(n, 2);
  const Rational a = f.f1.evaluate(S);
  const Rational b = a / Rational(n - 1) + f.f2.evaluate(S);
  std::optional<double> c;
  try {
    c = zeta_constants(n, s.get_d()).c;
  } catch (const GammaPole&) {
  }
  std::ostringstream cs;
  if (c) cs.precision(12), cs << *c;

  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["case"] = {{"operator", to_string(op)}, {"n", n}, {"p", p}};
    j["s"] = to_string(s);
    j["k"] = k;
    j["S"] = to_string(S);
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["classification"] = to_string(cls);
    j["informational"] = {{"C(n,s)", c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json(nullptr)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "operator,n,p,s,k,S,a,b,classification\n"
       << to_string(op) << ',' << n << ',' << p << ',' << s << ',' << k << ',' << S << ',' << a << ',' << b << ','
       << to_string(cls) << '\n';
    return os.str();
  }
  os << to_string(cls) << '\n'
     << "a = f1(S) = " << a << "\n"
     << "b = f1(S)/(n-1) + f2(S) = " << b << "\n"
     << "S = " << S << '\n';
  if (c) os << "C(n,s) = " << cs.str() << " (informational)\n";
  return os.str();
}

ScanOutput scan(int n_max, Format format) {
  if (n_max < 4 || n_max > kMaxDimension) throw UsageError("need 4 <= n-max <= " + std::to_string(kMaxDimension));
  const auto rep = corollary_scan(n_max);
  ScanOutput out;
  out.matches = rep.bochner_smallest_saddle == 4 && rep.derham_family_no_saddle && rep.odd_direction_consistent;
  std::ostringstream summary;
  summary << "bochner smallest saddle n = "
          << (rep.bochner_smallest_saddle ? std::to_string(*rep.bochner_smallest_saddle) : "none")
          << "; derham: " << (rep.derham_family_no_saddle ? "none" : "saddle found");
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["n_max"] = n_max;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
      nlohmann::ordered_json row;
      row["case"] = {{"operator", to_string(r.op)}, {"n", r.n}, {"p", r.p}};
      row["a"] = to_string(r.a);
      row["b"] = to_string(r.b);
      row["classification"] = to_string(r.cls);
      row["trivial"] = r.trivial;
      row["det_direction"] = r.det_direction ? nlohmann::ordered_json(*r.det_direction) : nlohmann::ordered_json(nullptr);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["bochner_smallest_saddle"] =
        rep.bochner_smallest_saddle ? nlohmann::ordered_json(*rep.bochner_smallest_saddle) : nlohmann::ordered_json(nullptr);
    j["derham_family_no_saddle"] = rep.derham_family_no_saddle;
    j["odd_direction_consistent"] = rep.odd_direction_consistent;
    j["summary"] = summary.str();
    j["matches"] = out.matches;
    out.text = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream os;
  if (format == Format::Csv) os << "operator,n,p,a,b,classification,trivial,det_direction\n";
  for (const auto& r : rep.rows) {
    if (format == Format::Csv) {
      os << to_string(r.op) << ',' << r.n << ',' << r.p << ',' << r.a << ',' << r.b << ',' << to_string(r.cls) << ','
         << (r.trivial ? "true" : "false") << ',' << r.det_direction.value_or("") << '\n';
    } else {
      os << to_string(r.op) << " n=" << r.n << " p=" << r.p << "  a=" << r.a << " b=" << r.b << "  "
         << to_string(r.cls);
      if (r.trivial) os << " (zero operator)";
      if (r.det_direction) os << "  finite index: " << *r.det_direction;
      os << '\n';
    }
  }
  if (format == Format::Text)
    os << summary.str() << '\n'
       << "odd-n direction consistent: " << (rep.odd_direction_consistent ? "yes" : "no") << '\n';
  out.text = os.str();
  return out;
}

}  // namespace zetahess::cli
