// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "packing/packing.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

namespace {

using namespace packing;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0) check.expect(elapsed < limit_seconds, "over time limit");
  if (!check.ok) ++failures;
  std::printf("%s %2d %-28s %8.2fs%s%s\n", check.ok ? "PASS" : "FAIL", id, title, elapsed,
              check.ok ? "" : "  ", check.detail.c_str());
  std::fflush(stdout);
}

QuadPoly2 random_tuple(std::mt19937_64& rng, int bound) {
  auto pick = [&] { return Int(static_cast<int>(rng() % (2 * bound + 1)) - bound); };
  return QuadPoly2{pick(), pick(), pick(), pick(), pick(), pick()};
}

}  // namespace

int main() {
  criterion(1, "enumeration values", 1, [](Check& c) {
    const Point2 listed[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}};
    for (int n = 0; n < 7; ++n) c.expect(cantor1(listed[n]) == n, "cantor1 mismatch at " + std::to_string(n));
  });

  criterion(2, "pack/unpack round trips", 10, [](Check& c) {
    for (int n = 0; n < 100000 && c.ok; ++n) c.expect(pack_m(unpack_m(n, 2)) == n, "dim 2 at " + std::to_string(n));
    for (int n = 0; n < 10000 && c.ok; ++n) c.expect(pack_m(unpack_m(n, 3)) == n, "dim 3 at " + std::to_string(n));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
      Nat n = oracle::random_int(rng, 200, false);
      std::size_t m = 2 + i % 3;
      c.expect(pack_m(unpack_m(n, m)) == n, "200-bit value " + n.str());
      PointM p = unpack_m(n, m);
      c.expect(unpack_m(pack_m(p), m) == p, "point round trip");
    }
  });

  criterion(3, "triangular law", 1, [](Check& c) {
    for (int k = 0; k <= 1000; ++k) c.expect(cantor1({k, 0}) == k * (k + 1) / 2, "k = " + std::to_string(k));
    Nat k = boost::multiprecision::pow(Nat(10), 100);
    c.expect(cantor1({k, 0}) == k * (k + 1) / 2, "k = 10^100");
  });

  criterion(4, "quadratic search B=4", 300, [](Check& c) {
    auto found = search_quadratics(4, 60, 500);
    c.expect(found.size() == 2, "expected two packing polynomials, got " + std::to_string(found.size()));
    if (found.size() != 2) return;
    c.expect(found[0].polynomial == kCantor1 && found[1].polynomial == kCantor2, "unexpected tuples");
    for (const auto& r : found) {
      PackingVerdict v = verify_quadratic_packing(r.polynomial, 60, Nat(500));
      c.expect(v.packing_on_range() && v.covered_upto >= 500, "brute force rejects " + r.polynomial.str());
      c.expect(verify_certificate(r.polynomial, r.certificate), "certificate rejected");
    }
  });

  criterion(5, "square completion identity", 10, [](Check& c) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
      QuadPoly2 F = random_tuple(rng, 1000);
      if (i % 10 == 0) F.a = 0;
      if (i % 10 == 1) F.b = F.c = F.a;  // D = 0
      Int x = rng() % 101, y = rng() % 101;
      SquareCompletion sc = square_completion(F);
      Int twice = (F.a * x + 2 * F.b * y + F.d) * x + (F.c * y + F.e) * y + 2 * F.f;
      Int u = sc.u(x, y), v = sc.v(y);
      c.expect(8 * F.a * sc.D * twice == 2 * (sc.D * u * u - v * v + sc.r), "identity fails for " + F.str());
    }
  });

  criterion(6, "region counts", 0, [](Check& c) {
    for (int m = 2; m <= 12; ++m) {
      RegionCounts closed = region_counts(m);
      c.expect(closed == region_counts_bruteforce(m), "closed form differs at m = " + std::to_string(m));
      c.expect(closed.total() == 283 * m * m + 9 * m && closed.total() < 288 * m * m,
               "total bound at m = " + std::to_string(m));
    }
  });

  criterion(7, "non-residue primes", 30, [](Check& c) {
    for (int D = -100; D <= 100; ++D) {
      if (D == 0 || is_square(D)) continue;
      for (Int ell : {Int(1), Int(8), Int(8 * std::abs(D))}) {
        NonResidueCertificate cert = nonresidue_prime(D, ell);
        c.expect(oracle::euler_criterion(D, cert.p) == -1 && legendre(D, cert.p) == -1,
                 "residue for D = " + std::to_string(D));
        c.expect(ell % cert.p != 0, "p divides ell for D = " + std::to_string(D));
        c.expect(check_nonresidue_certificate(cert), "certificate check for D = " + std::to_string(D));
      }
    }
  });

  criterion(8, "modular gaps", 0, [](Check& c) {
    std::mt19937_64 rng(8);
    int seen = 0;
    while (seen < 20) {
      QuadPoly2 F = random_tuple(rng, 6);
      if (!validate(F).passed() || !is_positive_definite_on_sector(F) || is_square(square_completion(F).D)) continue;
      Certificate cert = classify(F);
      const auto* mg = std::get_if<ModularGap>(&cert.evidence);
      c.expect(mg != nullptr, "no modular gap for " + F.str());
      if (!mg) return;
      ++seen;
      const Nat P = mg->cert.p * mg->cert.p;
      const Nat target = mod_floor(mg->unattained_value(), P);
      for (int x = 0; x <= 200; ++x)
        for (int y = 0; y <= 200; ++y)
          if (mod_floor(eval(F, {x, y}), P) == target) c.expect(false, "value attained for " + F.str());
      c.expect(verify_certificate(F, cert), "certificate rejected for " + F.str());
      Json doc = certificate_document(F, cert);
      for (const char* field : {"D", "ell", "p", "s", "unattained"}) {
        Json mutated = doc;
        std::string text = mutated["certificate"][field].get<std::string>();
        char& last = text.back();
        last = last == '9' ? '0' : static_cast<char>(last + 1);
        mutated["certificate"][field] = text;
        c.expect(!verify_document(mutated), std::string("mutated ") + field + " accepted for " + F.str());
      }
      Certificate shifted = cert;
      std::get<ModularGap>(shifted.evidence).s += 1;
      c.expect(!verify_certificate(F, shifted), "shifted s accepted");
    }
  });

  criterion(9, "sector packings", 60, [](Check& c) {
    const int specs[][2] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 4}};
    for (const auto& [r, s] : specs) {
      SectorSpec spec(r, s);
      for (SectorVariant which : {SectorVariant::F, SectorVariant::G}) {
        PackingVerdict v = verify_sector_packing(spec, which, 3000);
        std::string name = std::string(which == SectorVariant::F ? "F " : "G ") + std::to_string(r) + "/" +
                           std::to_string(s);
        c.expect(v.injective_on_box && !v.negative_at && v.gaps.empty(), name + " not a packing on the prefix");
        c.expect(v.points_checked >= 3000 && v.covered_upto >= 0, name + " checked too little");
      }
    }
  });

  criterion(10, "linear refutations", 0, [](Check& c) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
      std::size_t m = 2 + i % 2;
      const int ells[] = {0, 1, 5};
      LinearPoly L;
      for (std::size_t k = 0; k < m; ++k) L.coeffs.push_back(Int(static_cast<int>(rng() % 201) - 100));
      L.constant = Int(static_cast<int>(rng() % 201) - 100);
      L.ell = ells[(i / 2) % 3];
      Certificate cert = refute_linear(L.coeffs, L.constant, L.ell);
      const auto* col = std::get_if<Collision>(&cert.evidence);
      c.expect(col != nullptr, "no collision");
      if (!col) return;
      c.expect(col->p1 != col->p2 && L.contains(col->p1) && L.contains(col->p2), "witness outside S");
      c.expect(L.eval(col->p1) == L.eval(col->p2), "witness values differ");
      c.expect(verify_linear_collision(L, cert), "certificate rejected");
    }
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
