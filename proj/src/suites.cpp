#include "slicealg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "slicealg/algebra_io.hpp"
#include "slicealg/linalg.hpp"
#include "slicealg/orthogonal.hpp"
#include "slicealg/twistor.hpp"
#include "slicealg/zero_variety.hpp"

namespace slicealg {

namespace {

struct Outcome {
  double residual = 0.0;
  bool pass = true;
  nlohmann::json input;
  std::string detail;
};

using Trial = std::function<Outcome(int, Rng&)>;

[[noreturn]] void not_applicable(std::string_view suite, const std::string& why) {
  throw Error(ErrorCode::SuiteNotApplicable, std::string(suite) + ": " + why);
}

std::vector<RootOfMinusOne> seeds_or_skip(std::string_view suite, const Algebra& alg,
                                          std::uint64_t seed) {
  try {
    return sampling_seeds(alg, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    not_applicable(suite, "no root of -1 found");
  }
}

// Cycling through the seeds reaches every component they represent.
RootOfMinusOne draw_root(const Algebra& alg, const std::vector<RootOfMinusOne>& seeds, int trial,
                         Rng& rng) {
  return sample_root(alg, seeds[static_cast<std::size_t>(trial) % seeds.size()], rng);
}

Outcome from_report(const IdentityReport& report, nlohmann::json input) {
  Outcome o;
  o.input = std::move(input);
  for (const auto& c : report) {
    o.residual = std::max(o.residual, c.residual);
    if (!c.pass) {
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += c.identity;
    }
  }
  return o;
}

void fold(Outcome& o, double residual, bool pass, const std::string& what) {
  o.residual = std::max(o.residual, residual);
  if (!pass) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

Element tangent_vector(const TangentFrame& frame, Rng& rng) {
  Eigen::VectorXd c(frame.dimension());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = standard_normal(rng);
  Element h = frame.basis * c;
  const double n = h.norm();
  return n > 0.0 ? Element(h / n) : h;
}

StemPolynomial random_stem(const Algebra& alg, int max_degree, Rng& rng) {
  const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Element> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.push_back(random_element(alg.dimension(), rng));
  return stem_from_slice_poly(alg.dimension(), coeffs);
}

ProjectivePoint random_cp1(Rng& rng) {
  return make_point({random_complex(rng), random_complex(rng)});
}

Trial traces_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("traces", alg, opt.seed);
  return [&alg, seeds, tol = opt.tol](int trial, Rng& rng) {
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    const Element a = random_element(alg.dimension(), rng);
    IdentityReport checks = verify_trace_identities(alg, s, tol);
    for (auto& c : verify_root_operator_identities(alg, s, tol)) checks.push_back(std::move(c));
    for (auto& c : verify_operator_identities(alg, a, tol)) checks.push_back(std::move(c));
    return from_report(checks, {{"s", element_to_json(s.element())}, {"a", element_to_json(a)}});
  };
}

Trial nijenhuis_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("nijenhuis", alg, opt.seed);
  return [&alg, seeds, tol = opt.tol](int trial, Rng& rng) {
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    const TangentFrame frame = tangent_frame(alg, s);
    const Element x = tangent_vector(frame, rng);
    const Element y = tangent_vector(frame, rng);
    const double r = nijenhuis(alg, s, x, y, tol).norm();
    Outcome o;
    o.input = {{"s", element_to_json(s.element())}, {"x", element_to_json(x)},
               {"y", element_to_json(y)}};
    fold(o, r, r <= tol, "nijenhuis tensor nonzero");
    return o;
  };
}

Trial dims_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("dims", alg, opt.seed);
  return [&alg, seeds](int trial, Rng& rng) {
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    const int dim = tangent_frame(alg, s).dimension();
    const int inv = component_invariant(alg, s);
    Outcome o;
    o.input = {{"s", element_to_json(s.element())}, {"dim", dim}, {"invariant", inv}};
    fold(o, std::abs(2.0 * dim - (alg.dimension() + inv)), 2 * dim == alg.dimension() + inv,
         "dim T_s S != (N + tr T_s) / 2");
    return o;
  };
}

Trial zero_variety_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("zero-variety", alg, opt.seed);
  return [&alg, seeds, tol = opt.tol, seed = opt.seed](int trial, Rng& rng) {
    const int n = alg.dimension();
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    Outcome o;
    o.input = {{"s", element_to_json(s.element())}};
    // W(L_s) columns are zeros of pi(., s).
    const ComplexSubspace w_ls = minus_i_eigenspace(alg, s);
    double eig = 0.0;
    for (int c = 0; c < w_ls.rank(); ++c) {
      const ComplexElement col = ComplexElement::from_vector(w_ls.basis.col(c));
      eig = std::max(eig, pi_tensor_eval(alg, col, s).norm() / (1.0 + col.norm()));
    }
    fold(o, eig, eig <= tol, "W(L_s) column not annihilated by pi");

    // A constructed member (q, s q) must be found; a random w must get a
    // verdict consistent with its witness.
    const Element q = random_element(n, rng);
    const ComplexElement member{q, alg.multiply(s.element(), q)};
    const WitnessSearch found = zero_variety_witness(alg, member, seed, tol);
    const bool ok = found.verdict == Verdict::Member && found.witness &&
                    found.witness->residual <= tol * (1.0 + member.norm());
    fold(o, found.witness ? found.witness->residual : 1.0, ok,
         "constructed member not recognised (" + std::string(to_string(found.verdict)) + ")");

    const ComplexElement random{random_element(n, rng), random_element(n, rng)};
    const WitnessSearch probe = zero_variety_witness(alg, random, seed, tol);
    if (probe.witness) {
      const double r = probe.witness->residual;
      fold(o, r, r <= tol * (1.0 + random.norm()), "reported witness does not annihilate w");
    }
    return o;
  };
}

Trial absorption_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("absorption", alg, opt.seed);
  // Left absorption is only asserted when S is compact; a division algebra
  // stands in for that here.
  const bool compact = !find_zerodivisor(alg, opt.seed).has_value();
  return [&alg, seeds, compact, tol = opt.tol, seed = opt.seed](int trial, Rng& rng) {
    const int n = alg.dimension();
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    const Element q = random_element(n, rng);
    const ComplexElement w{q, alg.multiply(s.element(), q)};
    const ComplexElement wp{random_element(n, rng), random_element(n, rng)};
    Outcome o;
    o.input = {{"s", element_to_json(s.element())}, {"w", {element_to_json(w.re), element_to_json(w.im)}},
               {"wp", {element_to_json(wp.re), element_to_json(wp.im)}}};
    const ZeroWitness right = right_absorption(alg, w, s, wp, tol);
    const double right_tol = 1e-8 * (1.0 + w.norm() * wp.norm());
    fold(o, right.residual, right.residual <= right_tol, "right absorption residual");

    const LeftAbsorption left = left_absorption(alg, w, s, wp, seed, tol);
    if (left.by_formula) {
      const double b2 = left.witness->s.element().squaredNorm();
      fold(o, left.formula_root_residual, left.formula_root_residual <= tol * (1.0 + b2),
           "closed-form left witness is not a root");
    }
    if (compact) {
      const bool ok = left.verdict == Verdict::Member && left.witness &&
                      left.witness->residual <= 1e-8 * (1.0 + w.norm() * wp.norm());
      fold(o, left.witness ? left.witness->residual : 1.0, ok,
           "left absorption " + std::string(to_string(left.verdict)));
    }
    return o;
  };
}

Trial cone_trial(const Algebra& alg, const SuiteOptions&) {
  const InnerProduct g = InnerProduct::identity(alg.dimension());
  if (antisymmetric_subspace(alg, g).cols() == 0) not_applicable("cone", "A_0 is trivial");
  return [&alg, g](int, Rng& rng) {
    const RootOfMinusOne s = sample_S0(alg, g, rng);
    const double beta = standard_normal(rng);
    const double gamma = std::abs(standard_normal(rng)) + 0.1;
    const Element x = beta * alg.unit() + gamma * s.element();
    Outcome o;
    o.input = {{"s", element_to_json(s.element())}, {"beta", beta}, {"gamma", gamma}};
    const auto d = cone_decompose(alg, x, g);
    if (!d || !d->root) {
      fold(o, 1.0, false, "cone element not decomposed");
      return o;
    }
    const double err = std::max({std::abs(d->beta - beta),
                                 std::abs(d->alpha - std::hypot(beta, gamma)),
                                 (d->root->element() - s.element()).norm()});
    fold(o, err, err <= 1e-8, "cone decomposition mismatch");
    return o;
  };
}

Trial twistor_trial(const Algebra& alg, const SuiteOptions&) {
  std::optional<QuaternionFrame> frame;
  try {
    frame = detect_quaternion_frame(alg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoQuaternionFrame) throw;
    not_applicable("twistor", "no quaternion frame");
  }
  return [&alg, f = *frame](int, Rng& rng) {
    const StemPolynomial stem = random_stem(alg, 5, rng);
    const Complex z = random_complex(rng);
    Outcome o;
    o.input = {{"z", {z.real(), z.imag()}}, {"degree", stem.degree()}};
    for (int m = 0; m < 5; ++m) {
      const ProjectivePoint u = random_cp1(rng);
      const Element lhs = eval_slice(alg, stem, z, twistor_root(alg, f, u));
      const Element rhs = rho1(alg, f, twistor_lift(alg, f, stem, z, u));
      const double r = (lhs - rhs).norm() / (1.0 + lhs.norm());
      fold(o, r, r <= 1e-8, "f(rho(z,u)) != rho1(lift(z,u))");
    }
    // Line property: lifts over a fixed z span a 2-plane.
    ComplexMatrix stack(6, 4);
    for (int m = 0; m < 6; ++m) stack.row(m) = twistor_lift(alg, f, stem, z, random_cp1(rng)).coords().normalized().transpose();
    Eigen::JacobiSVD<ComplexMatrix> svd(stack);
    const auto sv = svd.singularValues();
    const double third = sv(2) / sv(0);
    fold(o, third, third <= 1e-8, "lifted sphere is not a line");
    return o;
  };
}

Trial stereographic_trial(const Algebra& alg, const SuiteOptions& opt) {
  auto seeds = seeds_or_skip("stereographic", alg, opt.seed);
  std::optional<RootOfMinusOne> u;
  for (const auto& s : seeds) {
    const Element& e = s.element();
    bool central = true;
    for (int j = 0; j < alg.dimension() && central; ++j)
      central = (alg.multiply(e, alg.basis(j)) - alg.multiply(alg.basis(j), e)).norm() <= opt.tol;
    if (!central) {
      u = s;
      break;
    }
  }
  if (!u) not_applicable("stereographic", "every seed root is central");
  const bool clifford = alg.clifford_signature().has_value();
  return [&alg, seeds, u = *u, clifford, tol = opt.tol](int trial, Rng& rng) {
    const int n = alg.dimension();
    const RootOfMinusOne s = draw_root(alg, seeds, trial, rng);
    const ComplexSubspace fiber = stereographic_fiber(alg, u, s);
    Outcome o;
    o.input = {{"u", element_to_json(u.element())}, {"s", element_to_json(s.element())},
               {"dim", fiber.rank()}};
    // Real span of the fiber, then closure under L_u.
    Matrix span(n, 2 * fiber.rank());
    for (int c = 0; c < fiber.rank(); ++c) {
      span.col(2 * c) = fiber.basis.col(c).real();
      span.col(2 * c + 1) = -fiber.basis.col(c).imag();
    }
    const Matrix op = alg.right(s.element()) * alg.left(u.element()) + Matrix::Identity(n, n);
    const double eig = fiber.rank() ? (op * span).norm() / span.norm() : 0.0;
    fold(o, eig, eig <= tol, "fiber vector outside ker(R_s L_u + I)");
    if (clifford) fold(o, std::abs(4.0 * fiber.rank() - n), 4 * fiber.rank() == n, "dim V_s != N/4");
    else fold(o, 0.0, fiber.rank() > 0, "fiber is trivial");

    // Generalized twistor against eval_slice where the standard section is usable.
    const Element sigma = alg.unit() - alg.multiply(u.element(), s.element());
    if (!is_zerodivisor(alg, sigma)) {
      const StemPolynomial stem = random_stem(alg, 3, rng);
      const Complex z = random_complex(rng);
      const ProjectivePoint p = generalized_twistor(alg, stem, standard_section(alg, u), z, s, u);
      const Element lhs = eval_slice(alg, stem, z, s);
      const double r = (rho1_general(alg, p) - lhs).norm() / (1.0 + lhs.norm());
      fold(o, r, r <= 1e-8, "generalized twistor does not induce f");
    }
    return o;
  };
}

Trial make_trial(std::string_view name, const Algebra& alg, const SuiteOptions& opt) {
  if (name == "traces") return traces_trial(alg, opt);
  if (name == "nijenhuis") return nijenhuis_trial(alg, opt);
  if (name == "dims") return dims_trial(alg, opt);
  if (name == "zero-variety") return zero_variety_trial(alg, opt);
  if (name == "absorption") return absorption_trial(alg, opt);
  if (name == "cone") return cone_trial(alg, opt);
  if (name == "twistor") return twistor_trial(alg, opt);
  if (name == "stereographic") return stereographic_trial(alg, opt);
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"traces", "nijenhuis", "dims", "zero-variety",
                                              "absorption", "cone", "twistor", "stereographic"};
  return names;
}

std::vector<RootOfMinusOne> sampling_seeds(const Algebra& alg, std::uint64_t seed) {
  std::vector<RootOfMinusOne> seeds = seed_roots(alg);
  if (seeds.empty()) seeds.push_back(find_seed_root(alg, seed));
  return seeds;
}

std::optional<Element> find_zerodivisor(const Algebra& alg, std::uint64_t seed) {
  const int n = alg.dimension();
  std::vector<Element> probes;
  for (int i = 0; i < n; ++i) probes.push_back(alg.basis(i));
  for (int i = 0; i < n; ++i) {
    if (i == alg.unit_index()) continue;
    probes.push_back(alg.unit() + alg.basis(i));
    probes.push_back(alg.unit() - alg.basis(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      probes.push_back(alg.basis(i) + alg.basis(j));
      probes.push_back(alg.basis(i) - alg.basis(j));
    }
  for (const auto& p : probes)
    if (is_zerodivisor(alg, p)) return p;
  Rng rng = make_rng(seed, 0x2D1);
  for (int k = 0; k < 200; ++k) {
    Element p = random_element(n, rng);
    if (is_zerodivisor(alg, p)) return p;
  }
  return std::nullopt;
}

nlohmann::json algebra_info(const Algebra& alg, std::uint64_t seed) {
  const int n = alg.dimension();
  double unit_residual = 0.0;
  for (int j = 0; j < n; ++j) {
    const Element e = alg.basis(j);
    unit_residual = std::max({unit_residual, (alg.multiply(alg.unit(), e) - e).norm(),
                              (alg.multiply(e, alg.unit()) - e).norm()});
  }
  nlohmann::json out = {{"name", alg.name()},
                        {"dimension", n},
                        {"labels", alg.labels()},
                        {"associativity_residual", alg.associativity_residual()},
                        {"unit_residual", unit_residual}};
  if (const auto zd = find_zerodivisor(alg, seed)) {
    out["zerodivisor"] = element_to_json(*zd);
  } else {
    out["zerodivisor"] = nullptr;
  }
  return out;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"trial", f.trial}, {"residual", f.residual}, {"input", f.input},
                        {"detail", f.detail}});
  nlohmann::json out = {{"suite", r.suite},
                        {"algebra", r.algebra},
                        {"trials", r.trials},
                        {"max_residual", r.max_residual},
                        {"pass_count", r.pass_count},
                        {"failures", failures},
                        {"seed", r.seed},
                        {"tolerance", r.tolerance},
                        {"pass", r.passed()}};
  if (r.wall_seconds) out["wall_time_s"] = *r.wall_seconds;
  return out;
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "trial,residual,detail\n";
  for (const auto& f : r.failures) {
    std::string detail = f.detail;
    std::replace(detail.begin(), detail.end(), '"', '\'');
    os << f.trial << ',' << f.residual << ",\"" << detail << "\"\n";
  }
  return os.str();
}

SuiteReport run_suite(std::string_view name, const Algebra& alg, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Trial trial = make_trial(name, alg, options);
  const int trials = std::max(0, options.trials);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(trials));
  for_each_index(static_cast<std::size_t>(trials), options.execution, [&](std::size_t i) {
    Rng rng = make_rng(options.seed, i);
    try {
      outcomes[i] = trial(static_cast<int>(i), rng);
    } catch (const Error& e) {
      outcomes[i] = Outcome{1.0, false, nullptr, e.what()};
    }
  });

  SuiteReport report;
  report.suite = std::string(name);
  report.algebra = alg.name();
  report.trials = trials;
  report.seed = options.seed;
  report.tolerance = options.tol;
  for (int i = 0; i < trials; ++i) {
    auto& o = outcomes[static_cast<std::size_t>(i)];
    report.max_residual = std::max(report.max_residual, o.residual);
    if (o.pass) {
      ++report.pass_count;
    } else {
      report.failures.push_back({i, o.residual, std::move(o.input), std::move(o.detail)});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace slicealg
