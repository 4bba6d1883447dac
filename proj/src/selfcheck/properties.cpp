#include "suptrop/selfcheck/properties.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "suptrop/digraph.hpp"
#include "suptrop/io.hpp"
#include "suptrop/lie.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/selfcheck/generators.hpp"
#include "suptrop/selfcheck/oracle.hpp"

namespace suptrop::selfcheck {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

  void next_case() { ++report_.cases; }
  void note(std::string text) { report_.note = std::move(text); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = std::invoke(std::forward<Describe>(describe));
  }

  PropertyReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  PropertyReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string show(const SuperScalar& x) { return format_scalar(x); }
std::string show(const SuperMatrix& a) { return "\n" + format_matrix(a); }

std::string show3(const char* law, const SuperScalar& x, const SuperScalar& y, const SuperScalar& z) {
  return std::string(law) + " fails for x=" + show(x) + " y=" + show(y) + " z=" + show(z);
}

SuperScalar maybe_eps(Rng& rng) {
  std::bernoulli_distribution zero(0.1);
  return zero(rng) ? SuperScalar::zero() : random_scalar(rng);
}

SuperSystem mixed_system(Rng& rng, std::size_t n, std::size_t count) {
  std::bernoulli_distribution nilpotent(0.5);
  if (nilpotent(rng)) return random_nilpotent_system(rng, n, count, random_density(rng, 0.1, 0.9));
  return random_system(rng, n, count, random_density(rng, 0.02, 0.4));
}

}  // namespace

PropertyReport scalar_semiring_laws(std::uint64_t seed, std::size_t triples) {
  Tally tally("scalar semiring laws");
  Rng rng(seed);
  const SuperScalar zero = SuperScalar::zero();
  const SuperScalar one = SuperScalar::one();
  for (std::size_t c = 0; c < triples; ++c) {
    tally.next_case();
    const SuperScalar x = maybe_eps(rng), y = maybe_eps(rng), z = maybe_eps(rng);
    auto law = [&](const char* name, bool ok) { tally.expect(ok, [&] { return show3(name, x, y, z); }); };
    law("⊕ commutative", super_add(x, y) == super_add(y, x));
    law("⊕ associative", super_add(super_add(x, y), z) == super_add(x, super_add(y, z)));
    law("⊕ idempotent", super_add(x, x) == x);
    law("ε neutral", super_add(x, zero) == x && super_add(zero, x) == x);
    law("⊗ commutative", super_mul(x, y) == super_mul(y, x));
    law("⊗ associative", super_mul(super_mul(x, y), z) == super_mul(x, super_mul(y, z)));
    law("one neutral", super_mul(x, one) == x && super_mul(one, x) == x);
    law("ε absorbing", super_mul(x, zero) == zero && super_mul(zero, x) == zero);
    law("left distributive", super_mul(x, super_add(y, z)) == super_add(super_mul(x, y), super_mul(x, z)));
    law("right distributive", super_mul(super_add(y, z), x) == super_add(super_mul(y, x), super_mul(z, x)));

    const ExtReal a = x.re, b = y.re, d = z.re;
    law("T ⊕ laws", trop_add(a, b) == trop_add(b, a) && trop_add(trop_add(a, b), d) == trop_add(a, trop_add(b, d)) &&
                        trop_add(a, a) == a && trop_add(a, eps) == a);
    law("T ⊗ laws", trop_mul(a, b) == trop_mul(b, a) && trop_mul(trop_mul(a, b), d) == trop_mul(a, trop_mul(b, d)) &&
                        trop_mul(a, ExtReal(0.0)) == a && trop_mul(a, eps) == eps);
    law("T distributive", trop_mul(a, trop_add(b, d)) == trop_add(trop_mul(a, b), trop_mul(a, d)));
  }
  return tally.finish();
}

PropertyReport ghost_ideal_laws(std::uint64_t seed, std::size_t cases) {
  Tally tally("ghost ideal and no zero divisors");
  Rng rng(seed);

  tally.next_case();
  const SuperScalar i = SuperScalar::unit_ghost();
  tally.expect(super_mul(i, i) == SuperScalar(ExtReal(0.0), eps), [&] { return "i ⊗ i = " + show(super_mul(i, i)); });
  tally.expect(is_ghost(SuperScalar::zero()), [] { return std::string("ε is not in Φ"); });

  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const SuperScalar x = maybe_eps(rng), y = maybe_eps(rng);
    const SuperScalar product = super_mul(x, y);
    tally.expect(!is_eps(product) || is_eps(x) || is_eps(y),
                 [&] { return "zero divisors x=" + show(x) + " y=" + show(y); });
    tally.expect(is_eps(x) || is_eps(y) || !is_eps(product),
                 [&] { return "non-ε product vanished x=" + show(x) + " y=" + show(y); });

    const SuperScalar g = SuperScalar::ghost(random_ext_real(rng));
    const SuperScalar h = SuperScalar::ghost(random_ext_real(rng));
    tally.expect(is_ghost(super_mul(g, y)) && is_ghost(super_mul(y, g)),
                 [&] { return "Φ not absorbing g=" + show(g) + " y=" + show(y); });
    tally.expect(is_ghost(super_add(g, h)), [&] { return "Φ not closed under ⊕ g=" + show(g) + " h=" + show(h); });
  }
  return tally.finish();
}

PropertyReport matrix_semiring_laws(std::uint64_t seed, std::size_t cases) {
  Tally tally("matrix semiring laws");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperMatrix a = random_matrix(rng, n, random_density(rng));
    const SuperMatrix b = random_matrix(rng, n, random_density(rng));
    const SuperMatrix d = random_matrix(rng, n, random_density(rng));
    const SuperMatrix id = identity_matrix<SuperScalar>(n);
    const SuperMatrix zero = zero_matrix<SuperScalar>(n);
    auto law = [&](const char* name, bool ok) {
      tally.expect(ok, [&] { return std::string(name) + " fails for A =" + show(a) + "B =" + show(b) + "C =" + show(d); });
    };
    law("⊕ commutative", equal(mat_add(a, b), mat_add(b, a)));
    law("⊕ associative", equal(mat_add(mat_add(a, b), d), mat_add(a, mat_add(b, d))));
    law("⊕ idempotent", equal(mat_add(a, a), a));
    law("ℰ neutral", equal(mat_add(a, zero), a));
    law("⊗ associative", equal(mat_mul(mat_mul(a, b), d), mat_mul(a, mat_mul(b, d))));
    law("left distributive", equal(mat_mul(a, mat_add(b, d)), mat_add(mat_mul(a, b), mat_mul(a, d))));
    law("right distributive", equal(mat_mul(mat_add(b, d), a), mat_add(mat_mul(b, a), mat_mul(d, a))));
    law("identity neutral", equal(mat_mul(a, id), a) && equal(mat_mul(id, a), a));
    law("ℰ absorbing", equal(mat_mul(a, zero), zero) && equal(mat_mul(zero, a), zero));

    const Permutation pi = random_permutation(rng, n);
    const SuperMatrix p = pi.as_matrix<SuperScalar>();
    const SuperMatrix pt = p.transpose();
    law("conjugate = Pᵀ A P", equal(conjugate(a, pi), mat_mul(mat_mul(pt, a), p)));
    law("conjugate by π then π⁻¹", equal(conjugate(conjugate(a, pi), pi.inverse()), a));
  }
  return tally.finish();
}

PropertyReport walk_expansion(std::uint64_t seed, std::size_t cases) {
  Tally tally("walk expansion of powers");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 5);
    const std::size_t k = random_size(rng, 1, 4);
    const SuperMatrix a = random_matrix(rng, n, random_density(rng));
    const SuperMatrix power = mat_pow(a, k);
    for (Vertex p = 0; p < n; ++p) {
      for (Vertex q = 0; q < n; ++q) {
        const SuperScalar expected = walk_sum(a, p, q, k);
        const SuperScalar got = power(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
        tally.expect(got == expected, [&] {
          return "A^" + std::to_string(k) + "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ") = " +
                 show(got) + ", walks give " + show(expected) + " for A =" + show(a);
        });
      }
    }
  }
  return tally.finish();
}

PropertyReport bracket_identities(std::uint64_t seed, std::size_t cases) {
  Tally tally("bracket identities");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperMatrix a = random_matrix(rng, n, random_density(rng));
    const SuperMatrix a2 = random_matrix(rng, n, random_density(rng));
    const SuperMatrix b = random_matrix(rng, n, random_density(rng));
    const Permutation pi = random_permutation(rng, n);
    auto law = [&](const char* name, bool ok) {
      tally.expect(ok, [&] { return std::string(name) + " fails for A =" + show(a) + "B =" + show(b); });
    };
    law("[A,A] = A²", equal(bracket(a, a), mat_pow(a, 2)));
    law("[A,B] = [B,A]", equal(bracket(a, b), bracket(b, a)));
    law("[A⊕A',B] = [A,B]⊕[A',B]", equal(bracket(mat_add(a, a2), b), mat_add(bracket(a, b), bracket(a2, b))));
    law("[A,ℰ] = ℰ", is_zero_matrix(bracket(a, zero_matrix<SuperScalar>(n))));
    law("conjugation preserves brackets",
        equal(conjugate(bracket(a, b), pi), bracket(conjugate(a, pi), conjugate(b, pi))));
  }
  return tally.finish();
}

PropertyReport nilpotency_equivalence(std::uint64_t seed, std::size_t per_dimension) {
  Tally tally("nilpotent <=> acyclic <=> cycle mean ε");
  Rng rng(seed);
  std::size_t nilpotent = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t c = 0; c < per_dimension; ++c) {
      tally.next_case();
      const double density =
          per_dimension > 1 ? 0.1 + 0.8 * static_cast<double>(c) / static_cast<double>(per_dimension - 1) : 0.5;
      const SuperMatrix a = c % 2 == 0 ? random_matrix(rng, n, density)
                                       : random_dag_matrix(rng, n, density, random_permutation(rng, n));
      const bool by_power = is_nilpotent_by_power(a);
      nilpotent += by_power ? 1 : 0;
      const SupportDigraph g = support(a);
      const auto cycle = find_cycle(g);
      const bool spectrum_eps = max_cycle_mean(a).is_eps();
      tally.expect(by_power == !cycle.has_value() && by_power == spectrum_eps, [&] {
        return "power=" + std::to_string(by_power) + " acyclic=" + std::to_string(!cycle) +
               " spectrum_eps=" + std::to_string(spectrum_eps) + " for A =" + show(a);
      });
      if (cycle) tally.expect(cycle->witnesses(g), [&] { return "invalid cycle witness for A =" + show(a); });
    }
  }
  tally.note(std::to_string(nilpotent) + " nilpotent");
  return tally.finish();
}

PropertyReport topological_order_validity(std::uint64_t seed, std::size_t cases) {
  Tally tally("topological order <=> acyclic");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 8);
    const double density = random_density(rng, 0.05, 0.6);
    const SupportDigraph g =
        support(c % 2 == 0 ? random_matrix(rng, n, density) : random_dag_matrix(rng, n, density, random_permutation(rng, n)));
    const auto cycle = find_cycle(g);
    try {
      const Permutation label = topological_order(g);
      tally.expect(!cycle, [&] { return "ordered a cyclic graph:\n" + dump_edges(g); });
      for (const auto& [u, v] : g.edges())
        tally.expect(label[u] < label[v], [&] { return "edge violates order:\n" + dump_edges(g); });
    } catch (const NotADAG& e) {
      tally.expect(cycle.has_value(), [&] { return "rejected an acyclic graph:\n" + dump_edges(g); });
      tally.expect(e.witness().witnesses(g), [&] { return "invalid NotADAG witness:\n" + dump_edges(g); });
    }
  }
  return tally.finish();
}

PropertyReport reachability_against_walks(std::uint64_t seed, std::size_t cases) {
  Tally tally("reachability = walk enumeration");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 5);
    const SupportDigraph g = support(random_matrix(rng, n, random_density(rng, 0.05, 0.7)));
    tally.expect(reachability(g) == walk_reachability(g), [&] { return "closure differs on:\n" + dump_edges(g); });
  }
  return tally.finish();
}

PropertyReport cycle_mean_against_enumeration(std::uint64_t seed, std::size_t cases) {
  Tally tally("Karp cycle mean = cycle enumeration");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 5);
    const SuperMatrix a = random_matrix(rng, n, random_density(rng, 0.05, 0.8));
    const ExtReal karp = max_cycle_mean(a);
    const ExtReal brute = enumerated_max_cycle_mean(magnitude(a));
    tally.expect(karp == brute, [&] {
      return "Karp " + format_ext_real(karp) + " vs enumeration " + format_ext_real(brute) + " for A =" + show(a);
    });
  }
  return tally.finish();
}

PropertyReport longest_path_consistency(std::uint64_t seed, std::size_t cases) {
  Tally tally("longest path bounds the vanishing power");
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 7);
    const SuperMatrix a = random_real_dag_matrix(rng, n, random_density(rng), random_permutation(rng, n));
    const std::size_t length = longest_path_length(support(a));
    tally.expect(is_zero_matrix(mat_pow(a, length + 1)), [&] { return "A^(L+1) ≠ ℰ for A =" + show(a); });
    if (length >= 1)
      tally.expect(!is_zero_matrix(mat_pow(a, length)), [&] { return "A^L = ℰ for A =" + show(a); });
  }
  return tally.finish();
}

PropertyReport element_nilpotency(std::uint64_t seed, std::size_t elements) {
  Tally tally("elements of nilpotent systems are nilpotent");
  Rng rng(seed);
  for (std::size_t c = 0; c < elements; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperSystem system = random_nilpotent_system(rng, n, random_size(rng, 1, 4), random_density(rng));
    tally.expect(decide(system).nilpotent(), [] { return std::string("generated system not decided nilpotent"); });
    const BracketWord word = random_word(rng, system.size(), 3);
    const SuperMatrix e = evaluate(word, system);
    tally.expect(is_nilpotent_by_power(e), [&] { return word.to_string() + " is not nilpotent:" + show(e); });
    SuperMatrix power = e;
    for (std::size_t k = 1; k <= n; ++k) {
      const SuperMatrix next = mat_pow(e, k + 1);
      tally.expect(equal(next, bracket(e, power)), [&] { return "E^(k+1) ≠ [E, E^k] for " + word.to_string(); });
      power = next;
    }
  }
  return tally.finish();
}

std::pair<PropertyReport, PropertyReport> decide_consistency(std::uint64_t seed, std::size_t systems) {
  Tally lemma("decide agrees with two-way paths and certificates");
  Tally roundtrip("triangularization round trip");
  Rng rng(seed);
  std::size_t successes = 0;
  for (std::size_t c = 0; c < systems; ++c) {
    lemma.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperSystem system = mixed_system(rng, n, random_size(rng, 1, 4));
    const auto outcome = decide(system);
    const SupportDigraph united = support(dominant_matrix(system));
    const std::string where = "system " + system_to_json(system).dump();

    if (outcome.nilpotent()) {
      lemma.expect(!check_two_way_obstruction(system).has_value(), [&] { return "two-way paths in SUCCESS " + where; });
      lemma.expect(!find_cycle(united).has_value(), [&] { return "SUCCESS on cyclic support " + where; });

      roundtrip.next_case();
      ++successes;
      const auto& success = outcome.success();
      const Permutation& label = success.permutation;
      for (std::size_t t = 0; t < system.size(); ++t) {
        roundtrip.expect(equal(success.conjugated[t], conjugate(system[t], label)) &&
                             is_strictly_upper(success.conjugated[t]),
                         [&] { return "generator " + std::to_string(t + 1) + " not upper after relabeling " + where; });
      }
      const SuperSystem relabeled(success.conjugated);
      for (int w = 0; w < 5; ++w) {
        const BracketWord word = random_word(rng, relabeled.size(), 3);
        const SuperMatrix value = evaluate(word, relabeled);
        roundtrip.expect(is_strictly_upper(value), [&] { return word.to_string() + " not upper in " + where; });
      }
    } else {
      const auto& failure = outcome.failure();
      const auto start = static_cast<Eigen::Index>(failure.cycle.vertices.front());
      lemma.expect(failure.cycle.witnesses(united), [&] { return "bad cycle witness " + where; });
      lemma.expect(!is_eps(failure.value(start, start)), [&] { return "certificate diagonal is ε " + where; });
      lemma.expect(!is_nilpotent_by_power(failure.value), [&] { return "certificate is nilpotent " + where; });
      lemma.expect(failure.word.max_generator_index() < system.size() &&
                       equal(evaluate(failure.word, system), failure.value),
                   [&] { return "certificate value does not match its word " + where; });
    }
  }
  lemma.note(std::to_string(successes) + " SUCCESS, " + std::to_string(systems - successes) + " FAILURE");
  return {lemma.finish(), roundtrip.finish()};
}

PropertyReport oracle_equivalence(std::uint64_t seed, std::size_t systems) {
  Tally tally("support closure fixpoint = reachability");
  Rng rng(seed);
  for (std::size_t c = 0; c < systems; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 5);
    const SuperSystem system = mixed_system(rng, n, random_size(rng, 1, 4));
    const Relation fixpoint = support_closure_oracle(system);
    const SupportDigraph united = support(dominant_matrix(system));
    const std::string where = system_to_json(system).dump();
    tally.expect(fixpoint == reachability(united), [&] { return "fixpoint differs for " + where; });
    const bool nilpotent = decide(system).nilpotent();
    tally.expect(nilpotent == !fixpoint.has_diagonal_pair() && nilpotent == !find_cycle(united).has_value(),
                 [&] { return "decide disagrees with the closure for " + where; });
  }
  return tally.finish();
}

PropertyReport lower_central_series_termination(std::uint64_t seed, std::size_t systems) {
  Tally tally("lower central series terminates by n-1");
  Rng rng(seed);
  for (std::size_t c = 0; c < systems; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperSystem system = random_nilpotent_system(rng, n, random_size(rng, 1, 3), random_density(rng));
    const auto series = lower_central_series(system, n);
    const std::string where = system_to_json(system).dump();
    tally.expect(!series.truncated, [&] { return "truncated for " + where; });
    tally.expect(series.index.has_value() && *series.index <= n - 1, [&] {
      return "index " + (series.index ? std::to_string(*series.index) : std::string("none")) + " for " + where;
    });
  }
  return tally.finish();
}

PropertyReport conjugation_equivariance(std::uint64_t seed, std::size_t systems) {
  Tally tally("decide is invariant under relabeling");
  Rng rng(seed);
  for (std::size_t c = 0; c < systems; ++c) {
    tally.next_case();
    const std::size_t n = random_size(rng, 1, 6);
    const SuperSystem system = mixed_system(rng, n, random_size(rng, 1, 4));
    const Permutation sigma = random_permutation(rng, n);
    std::vector<SuperMatrix> moved;
    for (const auto& g : system.generators()) moved.push_back(conjugate(g, sigma));
    const SuperSystem relabeled(std::move(moved));
    tally.expect(decide(system).nilpotent() == decide(relabeled).nilpotent(),
                 [&] { return "outcome changed under relabeling for " + system_to_json(system).dump(); });
  }
  return tally.finish();
}

std::vector<PropertyReport> run_all(std::uint64_t seed) {
  std::vector<PropertyReport> reports;
  reports.push_back(scalar_semiring_laws(seed, 10000));
  reports.push_back(ghost_ideal_laws(seed + 1, 10000));
  reports.push_back(matrix_semiring_laws(seed + 2, 500));
  reports.push_back(walk_expansion(seed + 3, 300));
  reports.push_back(bracket_identities(seed + 4, 1000));
  reports.push_back(nilpotency_equivalence(seed + 5, 1000));
  reports.push_back(topological_order_validity(seed + 6, 1000));
  reports.push_back(reachability_against_walks(seed + 7, 500));
  reports.push_back(cycle_mean_against_enumeration(seed + 8, 500));
  reports.push_back(longest_path_consistency(seed + 9, 500));
  reports.push_back(element_nilpotency(seed + 10, 200));
  auto [lemma, roundtrip] = decide_consistency(seed + 11, 500);
  reports.push_back(std::move(lemma));
  reports.push_back(std::move(roundtrip));
  reports.push_back(oracle_equivalence(seed + 12, 500));
  reports.push_back(lower_central_series_termination(seed + 13, 200));
  reports.push_back(conjugation_equivariance(seed + 14, 300));
  return reports;
}

}  // namespace suptrop::selfcheck
