#pragma once

// Certificate documents. Every integer is a decimal string so values of any size
// round-trip exactly.
//
//   { "format": "packing-certificate/1",
//     "polynomial": {"kind": "quadratic", "a": "1", ..., "f": "0"}
//                 | {"kind": "linear", "coeffs": ["2", "3"], "constant": "0", "ell": "0"},
//     "certificate": {"subject": <polynomial, as above>, "type": "collision", "p1": [...], "p2": [...], "value": "15"}
//                  | {"type": "gap", "g": ..., "frontier_diagonal": ..., "frontier_min": ...}
//                  | {"type": "modular-gap", "D": ..., "ell": ..., "p": ..., "s": ..., "unattained": ...}
//                  | {"type": "structural-fail", "condition": ..., "kind": ..., "witness": [x, y],
//                     "doubled_value": ...}
//                  | {"type": "is-cantor-1"} | {"type": "is-cantor-2"} }
//
// The certificate repeats the polynomial it was produced for; a document whose two copies
// disagree does not verify.

#include "packing/certificate.hpp"
#include "packing/integer.hpp"
#include "packing/quadratic.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace packing {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateFormat = "packing-certificate/1";

namespace detail {

inline Json json_point(const std::vector<Nat>& coords) {
  Json out = Json::array();
  for (const Nat& c : coords) out.push_back(c.str());
  return out;
}

inline Int json_int(const Json& node, const char* key) {
  const Json& v = node.at(key);
  if (!v.is_string()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be a decimal string");
  return parse_int(v.get<std::string>());
}

inline std::vector<Nat> json_coords(const Json& node, const char* key) {
  const Json& v = node.at(key);
  if (!v.is_array()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be an array");
  std::vector<Nat> out;
  for (const Json& item : v) {
    if (!item.is_string()) throw Error(Errc::ParseError, "coordinates must be decimal strings");
    out.push_back(parse_nat(item.get<std::string>()));
  }
  return out;
}

inline DefectKind parse_defect(const std::string& name) {
  for (DefectKind kind :
       {DefectKind::NonIntegerValue, DefectKind::NegativeValue, DefectKind::QuadraticPartNotPositive}) {
    if (name == defect_name(kind)) return kind;
  }
  throw Error(Errc::ParseError, "unknown defect kind '" + name + "'");
}

}  // namespace detail

inline Json to_json(const QuadPoly2& F) {
  return Json{{"kind", "quadratic"}, {"a", F.a.str()}, {"b", F.b.str()}, {"c", F.c.str()},
              {"d", F.d.str()},      {"e", F.e.str()}, {"f", F.f.str()}};
}

inline Json to_json(const LinearPoly& L) {
  Json coeffs = Json::array();
  for (const Int& a : L.coeffs) coeffs.push_back(a.str());
  return Json{{"kind", "linear"}, {"coeffs", coeffs}, {"constant", L.constant.str()}, {"ell", L.ell.str()}};
}

inline Json to_json(const Certificate& cert) {
  Json subject = std::visit([](const auto& poly) { return to_json(poly); }, cert.subject);
  Json body = std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Collision>) {
          return Json{{"type", "collision"},
                      {"p1", detail::json_point(c.p1.coords)},
                      {"p2", detail::json_point(c.p2.coords)},
                      {"value", c.value.str()}};
        } else if constexpr (std::is_same_v<T, Gap>) {
          return Json{{"type", "gap"},
                      {"g", c.g.str()},
                      {"frontier_diagonal", c.frontier_diagonal.str()},
                      {"frontier_min", c.frontier_min.str()}};
        } else if constexpr (std::is_same_v<T, ModularGap>) {
          return Json{{"type", "modular-gap"}, {"D", c.cert.D.str()},   {"ell", c.cert.ell.str()},
                      {"p", c.cert.p.str()},   {"s", c.s.str()},        {"unattained", c.unattained_value().str()}};
        } else if constexpr (std::is_same_v<T, StructuralFail>) {
          return Json{{"type", "structural-fail"},
                      {"condition", c.condition},
                      {"kind", defect_name(c.kind)},
                      {"witness", detail::json_point({c.witness.x, c.witness.y})},
                      {"doubled_value", c.doubled_value.str()}};
        } else if constexpr (std::is_same_v<T, IsCantor1>) {
          return Json{{"type", "is-cantor-1"}};
        } else {
          return Json{{"type", "is-cantor-2"}};
        }
      },
      cert.evidence);
  Json out{{"subject", subject}};
  out.update(body);
  return out;
}

inline QuadPoly2 quadratic_from_json(const Json& node) {
  return QuadPoly2{detail::json_int(node, "a"), detail::json_int(node, "b"), detail::json_int(node, "c"),
                   detail::json_int(node, "d"), detail::json_int(node, "e"), detail::json_int(node, "f")};
}

inline LinearPoly linear_from_json(const Json& node) {
  LinearPoly L;
  for (const Json& item : node.at("coeffs")) {
    if (!item.is_string()) throw Error(Errc::ParseError, "coefficients must be decimal strings");
    L.coeffs.push_back(parse_int(item.get<std::string>()));
  }
  L.constant = detail::json_int(node, "constant");
  L.ell = parse_nat(node.at("ell").get<std::string>());
  return L;
}

inline Evidence evidence_from_json(const Json& node) {
  const std::string type = node.at("type").get<std::string>();
  if (type == "collision") {
    return Collision{PointM{detail::json_coords(node, "p1")}, PointM{detail::json_coords(node, "p2")},
                     detail::json_int(node, "value")};
  }
  if (type == "gap") {
    return Gap{detail::json_int(node, "g"), detail::json_int(node, "frontier_diagonal"),
               detail::json_int(node, "frontier_min")};
  }
  if (type == "modular-gap") {
    ModularGap gap{NonResidueCertificate{detail::json_int(node, "D"), detail::json_int(node, "ell"),
                                         detail::json_int(node, "p")},
                   detail::json_int(node, "s")};
    if (node.contains("unattained") && detail::json_int(node, "unattained") != gap.unattained_value()) {
      throw Error(Errc::ParseError, "unattained value disagrees with s + p");
    }
    return gap;
  }
  if (type == "structural-fail") {
    std::vector<Nat> w = detail::json_coords(node, "witness");
    if (w.size() != 2) throw Error(Errc::ParseError, "witness must be a planar point");
    return StructuralFail{node.at("condition").get<std::string>(),
                          detail::parse_defect(node.at("kind").get<std::string>()), Point2{w[0], w[1]},
                          detail::json_int(node, "doubled_value")};
  }
  if (type == "is-cantor-1") return IsCantor1{};
  if (type == "is-cantor-2") return IsCantor2{};
  throw Error(Errc::ParseError, "unknown certificate type '" + type + "'");
}

inline Certificate certificate_from_json(const Json& node) {
  const Json& subject = node.at("subject");
  const std::string kind = subject.at("kind").get<std::string>();
  if (kind == "quadratic") return Certificate{quadratic_from_json(subject), evidence_from_json(node)};
  if (kind == "linear") return Certificate{linear_from_json(subject), evidence_from_json(node)};
  throw Error(Errc::ParseError, "unknown polynomial kind '" + kind + "'");
}

inline Json certificate_document(const QuadPoly2& F, const Certificate& cert) {
  return Json{{"format", kCertificateFormat}, {"polynomial", to_json(F)}, {"certificate", to_json(cert)}};
}

inline Json certificate_document(const LinearPoly& L, const Certificate& cert) {
  return Json{{"format", kCertificateFormat}, {"polynomial", to_json(L)}, {"certificate", to_json(cert)}};
}

/// Parses and re-checks a certificate document. Malformed documents are invalid, not errors.
inline bool verify_document(const Json& doc) {
  try {
    if (doc.at("format").get<std::string>() != kCertificateFormat) return false;
    const Json& poly = doc.at("polynomial");
    Certificate cert = certificate_from_json(doc.at("certificate"));
    const std::string kind = poly.at("kind").get<std::string>();
    if (kind == "quadratic") return verify_certificate(quadratic_from_json(poly), cert);
    if (kind == "linear") return verify_linear_collision(linear_from_json(poly), cert);
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace packing
