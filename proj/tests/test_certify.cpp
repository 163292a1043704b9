#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "copwin/certify.hpp"

using namespace copwin;

namespace {
Ordinal O(std::string_view text) { return Ordinal::parse(text); }
SymbolicVertex G(std::string_view a, std::string_view b) {
  return SymbolicVertex::grid(O(a), O(b));
}
}  // namespace

TEST_CASE("family names round-trip") {
  for (ClaimFamily f :
       {ClaimFamily::AxisX, ClaimFamily::AxisY, ClaimFamily::DiagonalPair,
        ClaimFamily::GridAssembly, ClaimFamily::TailDiagonal,
        ClaimFamily::GridCop, ClaimFamily::TailCop})
    CHECK(claim_family_from_name(claim_family_name(f)) == f);
  CHECK(!claim_family_from_name("nonsense").has_value());
}

TEST_CASE("witness map anchors") {
  SymbolicGraph g(O("w^2"), 0, true);

  // Axis case: reply one past the challenge on the x-axis.
  auto [y1, d1] =
      witness(g, ClaimFamily::AxisX, G("3", "2"), G("9", "0"), G("12", "1"));
  CHECK(y1 == G("13", "0"));
  CHECK(d1 == Ordinal(1));

  // Challenges already inside N[v] are leaves.
  auto [y2, d2] =
      witness(g, ClaimFamily::AxisX, G("3", "2"), G("9", "0"), G("2", "3"));
  CHECK(y2 == G("2", "3"));
  CHECK(d2 == Ordinal());

  // Diagonal case: axis reply past the challenge, rank min(a, b).
  auto [y3, d3] = witness(g, ClaimFamily::DiagonalPair, G("w", "w"),
                          G("2", "2"), G("w+1", "3"));
  CHECK(y3 == G("w+2", "0"));
  CHECK(d3 == Ordinal(3));
}

TEST_CASE("witness rejects challenges outside N[u]") {
  SymbolicGraph g(O("w"), 0, true);
  CHECK_THROWS_AS(witness(g, ClaimFamily::AxisX, G("3", "2"), G("9", "0"),
                          G("3", "5")),
                  HypothesisViolation);
}

TEST_CASE("equality claims are leaf certificates") {
  SymbolicGraph g(O("w"), 0, true);
  CertifyResult res =
      certify(g, {G("4", "7"), G("4", "7"), Ordinal()}, ClaimFamily::AxisX, 0);
  CHECK(res.ok);
  REQUIRE(res.certificate);
  CHECK(res.certificate->steps.empty());
}

TEST_CASE("axis instance audits cleanly with many samples") {
  SymbolicGraph g(O("w^2"), 0, true);
  CertifyOptions options;
  options.root_samples = 200;
  CertifyResult res = certify(g, {G("w", "5"), G("w+1", "0"), Ordinal(5)},
                              ClaimFamily::AxisX, 42, options);
  CHECK(res.ok);
  CHECK(res.violation.empty());
  CHECK(res.stats.challenges >= 200);
}

TEST_CASE("sampled claims audit across all families") {
  std::mt19937_64 rng(9);
  SymbolicGraph g(O("w*2"), 0, true);
  for (ClaimFamily f : {ClaimFamily::AxisX, ClaimFamily::AxisY,
                        ClaimFamily::DiagonalPair, ClaimFamily::GridAssembly})
    for (int i = 0; i < 5; ++i) {
      Claim claim = make_family_claim(g, f, rng);
      CertifyResult res = certify(g, claim, f, rng());
      std::string context = claim_family_name(f) + " claim (" +
                            claim.u.str() + ", " + claim.v.str() + ", " +
                            claim.rank.str() + "): " + res.violation;
      CAPTURE(context);
      CHECK(res.ok);
    }
  SymbolicGraph gt(O("w*2"), 2, true);
  for (ClaimFamily f : {ClaimFamily::TailDiagonal, ClaimFamily::GridCop,
                        ClaimFamily::TailCop})
    for (int i = 0; i < 5; ++i) {
      Claim claim = make_family_claim(gt, f, rng);
      CertifyResult res = certify(gt, claim, f, rng());
      std::string context = claim_family_name(f) + " claim (" +
                            claim.u.str() + ", " + claim.v.str() + ", " +
                            claim.rank.str() + "): " + res.violation;
      CAPTURE(context);
      CHECK(res.ok);
    }
}

TEST_CASE("corrupted witness ranks are caught at depth 1") {
  SymbolicGraph g(O("w^2"), 0, true);
  CertifyOptions options;
  options.root_samples = 200;
  options.tamper = [](SymbolicVertex&, Ordinal& delta, std::size_t depth) {
    if (depth == 0) delta += O("w^2");  // no longer below the claim rank
  };
  CertifyResult res = certify(g, {G("w", "5"), G("w+1", "0"), Ordinal(5)},
                              ClaimFamily::AxisX, 42, options);
  CHECK(!res.ok);
  CHECK(res.violation.find("does not decrease") != std::string::npos);
}

TEST_CASE("corrupted witness vertices are caught") {
  SymbolicGraph g(O("w^2"), 0, true);
  CertifyOptions options;
  options.root_samples = 200;
  options.tamper = [](SymbolicVertex& y, Ordinal&, std::size_t depth) {
    if (depth == 0) y = SymbolicVertex::grid(O("w+2"), Ordinal(3));
  };
  CertifyResult res = certify(g, {G("w", "5"), G("w+1", "0"), Ordinal(5)},
                              ClaimFamily::AxisX, 42, options);
  CHECK(!res.ok);
  CHECK(res.violation.find("outside N[") != std::string::npos);
}

TEST_CASE("cop vertices without diagonal access are reported") {
  SymbolicGraph g(O("w"), 0, true);
  // (3,4) has no diagonal vertex in its closed neighborhood, so the
  // assembly argument's regrouping step cannot be satisfied.
  CHECK_THROWS_AS(witness(g, ClaimFamily::GridAssembly, G("2", "2"),
                          G("3", "4"), G("5", "5")),
                  HypothesisViolation);
  try {
    witness(g, ClaimFamily::GridAssembly, G("2", "2"), G("3", "4"),
            G("5", "5"));
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("(3,4)") != std::string::npos);
  }
}

TEST_CASE("audits are deterministic given the seed") {
  SymbolicGraph g(O("w^2"), 0, true);
  std::mt19937_64 rng1(5), rng2(5);
  Claim c1 = make_family_claim(g, ClaimFamily::GridAssembly, rng1);
  Claim c2 = make_family_claim(g, ClaimFamily::GridAssembly, rng2);
  CHECK(c1.u == c2.u);
  CHECK(c1.v == c2.v);
  CHECK(c1.rank == c2.rank);
  CertifyResult r1 = certify(g, c1, ClaimFamily::GridAssembly, 77);
  CertifyResult r2 = certify(g, c2, ClaimFamily::GridAssembly, 77);
  CHECK(r1.ok == r2.ok);
  CHECK(r1.stats.challenges == r2.stats.challenges);
  CHECK(r1.stats.total_steps == r2.stats.total_steps);
}
