#pragma once

#include "packing/packing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace packing::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kInconclusive = 3 };

namespace detail {

inline std::vector<Int> parse_ints(const std::vector<std::string>& items) {
  std::vector<Int> out;
  for (const auto& s : items) out.push_back(parse_int(s));
  return out;
}

inline std::string join(const std::vector<Nat>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? " " : "") + coords[i].str();
  return out;
}

inline std::string point_str(const PointM& p) { return "(" + join(p.coords) + ")"; }
inline std::string point_str(const Point2& p) { return "(" + p.x.str() + " " + p.y.str() + ")"; }

inline void describe(std::ostream& out, const Certificate& cert) {
  out << certificate_name(cert) << "\n";
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Collision>) {
          out << "  " << point_str(c.p1) << " and " << point_str(c.p2) << " both map to " << c.value << "\n";
        } else if constexpr (std::is_same_v<T, Gap>) {
          out << "  value " << c.g << " is never attained: absent on diagonals x+y < " << c.frontier_diagonal
              << ", and every later point has value >= " << c.frontier_min << "\n";
        } else if constexpr (std::is_same_v<T, ModularGap>) {
          out << "  D = " << c.cert.D << " is a non-residue mod p = " << c.cert.p << "; s = " << c.s
              << "; no value is congruent to " << c.unattained_value() << " mod " << Nat(c.cert.p * c.cert.p)
              << "\n";
        } else if constexpr (std::is_same_v<T, StructuralFail>) {
          out << "  condition '" << c.condition << "' fails: " << defect_name(c.kind) << " at "
              << point_str(c.witness) << " (doubled value " << c.doubled_value << ")\n";
        }
      },
      cert.evidence);
}

inline int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::BudgetExhausted:
    case Errc::SearchExhausted:
    case Errc::FactorizationTooHard:
      return kInconclusive;
    default:
      return kUsage;
  }
}

inline SectorVariant parse_variant(const std::string& v) { return v == "g" ? SectorVariant::G : SectorVariant::F; }

}  // namespace detail

/// Runs one CLI invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing polynomials on lattice points: Cantor pairing, sector packings, and a certifying "
               "classifier for quadratic packing polynomials"};
  app.name("packing");
  app.require_subcommand(1);

  std::size_t dim = 2;
  std::string variant = "c1";
  std::vector<std::string> numbers;
  bool as_json = false;

  auto* pack = app.add_subcommand("pack", "pack a point of N0^m by left-folded cantor1");
  pack->add_option("--dim", dim, "dimension m")->required()->check(CLI::PositiveNumber);
  pack->add_option("coords", numbers, "x1 ... xm")->required();

  auto* unpack = app.add_subcommand("unpack", "inverse of pack");
  unpack->add_option("--dim", dim, "dimension m")->required()->check(CLI::PositiveNumber);
  unpack->add_option("n", numbers, "packed value")->required()->expected(1);

  auto* pack2 = app.add_subcommand("pack2", "evaluate a Cantor polynomial");
  pack2->add_option("--variant", variant, "c1 or c2")->check(CLI::IsMember({"c1", "c2"}));
  pack2->add_option("xy", numbers, "x y")->required()->expected(2);

  auto* unpack2 = app.add_subcommand("unpack2", "invert a Cantor polynomial");
  unpack2->add_option("--variant", variant, "c1 or c2")->check(CLI::IsMember({"c1", "c2"}));
  unpack2->add_option("n", numbers, "value")->required()->expected(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify F = (ax^2+2bxy+cy^2)/2 + (dx+ey)/2 + f");
  classify_cmd->add_option("coeffs", numbers, "a b c d e f")->required()->expected(6);
  classify_cmd->add_flag("--json", as_json, "emit the certificate document");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify-cert", "re-check a certificate document");
  verify_cmd->add_option("file", cert_path, "certificate JSON")->required();

  std::string ell_text = "0";
  auto* linear = app.add_subcommand("refute-linear", "collision for a1 x1 + ... + am xm + c on min(x) >= L");
  linear->add_option("--ell", ell_text, "lower bound L on every coordinate");
  linear->add_option("terms", numbers, "a1 ... am c")->required();
  linear->add_flag("--json", as_json, "emit the certificate document");

  std::string r_text, s_text, sector_variant = "f", points_text = "3000", values_text;
  auto* sector = app.add_subcommand("sector", "packing polynomials of the sector 0 <= y <= (r/s) x");
  sector->require_subcommand(1);
  auto add_sector_opts = [&](CLI::App* cmd) {
    cmd->add_option("--r", r_text, "numerator r")->required();
    cmd->add_option("--s", s_text, "denominator s")->required();
    cmd->add_option("--variant", sector_variant, "f or g")->check(CLI::IsMember({"f", "g"}));
  };
  auto* sector_pack = sector->add_subcommand("pack", "evaluate at a sector point");
  add_sector_opts(sector_pack);
  sector_pack->add_option("xy", numbers, "x y")->required()->expected(2);
  auto* sector_unpack_cmd = sector->add_subcommand("unpack", "sector point with a given value");
  add_sector_opts(sector_unpack_cmd);
  sector_unpack_cmd->add_option("n", numbers, "value")->required()->expected(1);
  auto* sector_verify = sector->add_subcommand("verify", "brute-force packing check on a point prefix");
  add_sector_opts(sector_verify);
  sector_verify->add_option("--points", points_text, "prefix size (whole columns covering it are checked)");
  sector_verify->add_option("--values", values_text, "certify values up to this bound");

  std::string coeff_bound_text, box_text, search_values_text;
  auto* search = app.add_subcommand("search-quadratics", "classify every small standard-form quadratic");
  search->add_option("--coeff-bound", coeff_bound_text, "coefficient bound B")->required();
  search->add_option("--box", box_text, "anti-diagonals used for brute-force confirmation")->required();
  search->add_option("--values", search_values_text, "values that must be covered exactly once")->required();
  search->add_flag("--json", as_json, "emit JSON");

  auto* nonresidue = app.add_subcommand("nonresidue-prime", "prime p with (D/p) = -1 and p not dividing L");
  nonresidue->add_option("D_L", numbers, "D L")->required()->expected(2);

  auto* regions = app.add_subcommand("region-counts", "lattice-point counts of the five regions for m");
  regions->add_option("m", numbers, "m >= 2")->required()->expected(1);

  std::vector<std::string> argv_store{"packing"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*pack) {
      if (numbers.size() != dim) {
        err << "expected " << dim << " coordinates, got " << numbers.size() << "\n";
        return kUsage;
      }
      PointM p;
      for (const auto& s : numbers) p.coords.push_back(parse_nat(s));
      out << pack_m(p) << "\n";
      return kOk;
    }
    if (*unpack) {
      out << detail::join(unpack_m(parse_nat(numbers[0]), dim).coords) << "\n";
      return kOk;
    }
    if (*pack2) {
      Point2 p{parse_nat(numbers[0]), parse_nat(numbers[1])};
      out << (variant == "c1" ? cantor1(p) : cantor2(p)) << "\n";
      return kOk;
    }
    if (*unpack2) {
      Nat n = parse_nat(numbers[0]);
      Point2 p = variant == "c1" ? cantor1_inverse(n) : cantor2_inverse(n);
      out << p.x << " " << p.y << "\n";
      return kOk;
    }
    if (*classify_cmd) {
      std::vector<Int> c = detail::parse_ints(numbers);
      QuadPoly2 F{c[0], c[1], c[2], c[3], c[4], c[5]};
      Certificate cert = classify(F);
      if (as_json) {
        out << certificate_document(F, cert).dump(2) << "\n";
      } else {
        detail::describe(out, cert);
      }
      return is_confirmation(cert) ? kOk : kRefuted;
    }
    if (*verify_cmd) {
      std::ifstream in(cert_path);
      if (!in) {
        err << "cannot read " << cert_path << "\n";
        return kUsage;
      }
      Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
      bool ok = !doc.is_discarded() && verify_document(doc);
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? kOk : kRefuted;
    }
    if (*linear) {
      if (numbers.size() < 3) {
        err << "need at least two coefficients and a constant\n";
        return kUsage;
      }
      std::vector<Int> terms = detail::parse_ints(numbers);
      LinearPoly L{{terms.begin(), terms.end() - 1}, terms.back(), parse_nat(ell_text)};
      Certificate cert = refute_linear(L.coeffs, L.constant, L.ell);
      if (as_json) {
        out << certificate_document(L, cert).dump(2) << "\n";
      } else {
        detail::describe(out, cert);
      }
      return kOk;
    }
    if (*sector) {
      SectorSpec spec(parse_nat(r_text), parse_nat(s_text));
      SectorVariant which = detail::parse_variant(sector_variant);
      if (*sector_pack) {
        out << sector_eval(spec, which, Point2{parse_nat(numbers[0]), parse_nat(numbers[1])}) << "\n";
        return kOk;
      }
      if (*sector_unpack_cmd) {
        Point2 p = sector_unpack(spec, which, parse_nat(numbers[0]));
        out << p.x << " " << p.y << "\n";
        return kOk;
      }
      std::optional<Nat> value_bound;
      if (!values_text.empty()) value_bound = parse_nat(values_text);
      PackingVerdict v =
          verify_sector_packing(spec, which, static_cast<std::size_t>(parse_nat(points_text)), value_bound);
      out << "points checked: " << v.points_checked << "\n"
          << "injective: " << (v.injective_on_box ? "yes" : "no") << "\n"
          << "covered up to: " << v.covered_upto << "\n"
          << "gaps: " << v.gaps.size() << "\n"
          << "frontier: " << (v.frontier_closed ? "closed" : "open") << "\n";
      if (!v.injective_on_box || v.negative_at || !v.gaps.empty()) return kRefuted;
      return v.frontier_closed && v.covered_upto >= 0 ? kOk : kInconclusive;
    }
    if (*search) {
      auto results =
          search_quadratics(parse_nat(coeff_bound_text), parse_nat(box_text), parse_nat(search_values_text));
      if (as_json) {
        Json doc = Json::array();
        for (const auto& r : results) {
          Json item = certificate_document(r.polynomial, r.certificate);
          item["verified_upto"] = r.verdict.covered_upto.str();
          doc.push_back(item);
        }
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& r : results)
          out << r.polynomial.str() << " " << certificate_name(r.certificate) << "\n";
      }
      return kOk;
    }
    if (*nonresidue) {
      NonResidueCertificate cert = nonresidue_prime(parse_int(numbers[0]), parse_int(numbers[1]));
      out << cert.p << "\n";
      return kOk;
    }
    if (*regions) {
      RegionCounts rc = region_counts(parse_nat(numbers[0]));
      out << rc.n1 << " " << rc.n2 << " " << rc.n3 << " " << rc.n4 << " " << rc.n5 << "\n"
          << "total " << rc.total() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return detail::exit_for(e);
  }
  return kUsage;
}

}  // namespace packing::cli
