#include "eigencount/operators.hpp"

#include <set>
#include <string>

#include <json.hpp>

#include "eigencount/error.hpp"

namespace eigencount {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_length(std::size_t got, int dim, std::string_view what)
{
    if (got != static_cast<std::size_t>(dim))
        throw InvalidArgument(std::string(what) + " has length " + std::to_string(got) + ", expected dim = " +
                              std::to_string(dim));
}

CMatrix diagonal_matrix(const std::vector<cplx>& values)
{
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
    return m;
}

CMatrix dense_checked(const CMatrix& entries, int dim, std::string_view what)
{
    if (entries.rows() != dim || entries.cols() != dim)
        throw InvalidArgument(std::string(what) + " is " + std::to_string(entries.rows()) + "x" +
                              std::to_string(entries.cols()) + ", expected " + std::to_string(dim) + "x" +
                              std::to_string(dim));
    return entries;
}

} // namespace

void validate(const OperatorModel& model)
{
    (void)materialize(model);
}

Materialized materialize(const OperatorModel& model)
{
    const int n = model.dim;
    if (n <= 0) throw InvalidArgument("dim must be positive, got " + std::to_string(n));

    Materialized out;
    out.l0 = std::visit(overloaded{
                            [n](const ZeroOp&) -> CMatrix { return CMatrix::Zero(n, n); },
                            [n](const ShiftOp&) -> CMatrix {
                                CMatrix m = CMatrix::Zero(n, n);
                                for (int j = 0; j + 1 < n; ++j) m(j + 1, j) = 1.0;
                                return m;
                            },
                            [n](const DiagonalOp& d) -> CMatrix {
                                check_length(d.values.size(), n, "base diagonal");
                                return diagonal_matrix(d.values);
                            },
                            [n](const DenseOp& d) -> CMatrix { return dense_checked(d.entries, n, "base dense"); },
                        },
                        model.base);
    out.k = std::visit(overloaded{
                           [n](const ZeroOp&) -> CMatrix { return CMatrix::Zero(n, n); },
                           [n](const RankOneOp& r) -> CMatrix {
                               check_length(r.left.size(), n, "rank_one left");
                               check_length(r.right.size(), n, "rank_one right");
                               const Eigen::Map<const CVector> u(r.left.data(), n);
                               const Eigen::Map<const CVector> v(r.right.data(), n);
                               return u * v.transpose();
                           },
                           [n](const DiagonalOp& d) -> CMatrix {
                               check_length(d.values.size(), n, "perturbation diagonal");
                               return diagonal_matrix(d.values);
                           },
                           [n](const DenseOp& d) -> CMatrix {
                               return dense_checked(d.entries, n, "perturbation dense");
                           },
                       },
                       model.perturbation);
    if (!out.l0.allFinite() || !out.k.allFinite()) throw InvalidArgument("operator model has non-finite entries");
    return out;
}

int structural_rank(const PertSpec& pert)
{
    return std::visit(overloaded{
                          [](const ZeroOp&) { return 0; },
                          [](const RankOneOp& r) {
                              auto nonzero = [](const std::vector<cplx>& v) {
                                  for (auto z : v)
                                      if (z != 0.0) return true;
                                  return false;
                              };
                              return nonzero(r.left) && nonzero(r.right) ? 1 : 0;
                          },
                          [](const DiagonalOp& d) {
                              int c = 0;
                              for (auto z : d.values) c += z != 0.0;
                              return c;
                          },
                          [](const DenseOp&) { return -1; },
                      },
                      pert);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using Kind = ParseError::Kind;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw ParseError(Kind::UnknownKey, where + "/" + key, "unknown key '" + key + "'");
    }
}

const json& require(const json& obj, const std::string& key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(Kind::Malformed, where, "missing required key '" + key + "'");
    return *it;
}

cplx parse_complex(const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(Kind::Malformed, where, "expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> parse_vector(const json& j, int dim, const std::string& where)
{
    if (!j.is_array()) throw ParseError(Kind::Malformed, where, "expected an array of [re, im] pairs");
    if (j.size() != static_cast<std::size_t>(dim))
        throw ParseError(Kind::DimensionMismatch, where,
                         "length " + std::to_string(j.size()) + " does not match dim " + std::to_string(dim));
    std::vector<cplx> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], where + "/" + std::to_string(i)));
    return out;
}

CMatrix parse_matrix(const json& j, int dim, const std::string& where)
{
    if (!j.is_array()) throw ParseError(Kind::Malformed, where, "expected an array of rows");
    if (j.size() != static_cast<std::size_t>(dim))
        throw ParseError(Kind::DimensionMismatch, where,
                         std::to_string(j.size()) + " rows do not match dim " + std::to_string(dim));
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const auto row = parse_vector(j[static_cast<std::size_t>(r)], dim, where + "/" + std::to_string(r));
        for (int c = 0; c < dim; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

std::string kind_of(const json& obj, const std::string& where)
{
    const auto& k = require(obj, "kind", where);
    if (!k.is_string()) throw ParseError(Kind::Malformed, where + "/kind", "kind must be a string");
    return k.get<std::string>();
}

BaseSpec parse_base(const json& obj, int dim)
{
    const std::string where = "/base";
    if (!obj.is_object()) throw ParseError(Kind::Malformed, where, "expected an object");
    const auto kind = kind_of(obj, where);
    if (kind == "shift" || kind == "zero") {
        reject_unknown_keys(obj, {"kind"}, where);
        if (kind == "shift") return ShiftOp{};
        return ZeroOp{};
    }
    if (kind == "diagonal") {
        reject_unknown_keys(obj, {"kind", "values"}, where);
        return DiagonalOp{parse_vector(require(obj, "values", where), dim, where + "/values")};
    }
    if (kind == "dense") {
        reject_unknown_keys(obj, {"kind", "entries"}, where);
        return DenseOp{parse_matrix(require(obj, "entries", where), dim, where + "/entries")};
    }
    throw ParseError(Kind::UnknownKind, where + "/kind", "unknown base kind '" + kind + "'");
}

PertSpec parse_perturbation(const json& obj, int dim)
{
    const std::string where = "/perturbation";
    if (!obj.is_object()) throw ParseError(Kind::Malformed, where, "expected an object");
    const auto kind = kind_of(obj, where);
    if (kind == "zero") {
        reject_unknown_keys(obj, {"kind"}, where);
        return ZeroOp{};
    }
    if (kind == "rank_one") {
        reject_unknown_keys(obj, {"kind", "left", "right"}, where);
        return RankOneOp{parse_vector(require(obj, "left", where), dim, where + "/left"),
                         parse_vector(require(obj, "right", where), dim, where + "/right")};
    }
    if (kind == "diagonal") {
        reject_unknown_keys(obj, {"kind", "values"}, where);
        return DiagonalOp{parse_vector(require(obj, "values", where), dim, where + "/values")};
    }
    if (kind == "dense") {
        reject_unknown_keys(obj, {"kind", "entries"}, where);
        return DenseOp{parse_matrix(require(obj, "entries", where), dim, where + "/entries")};
    }
    throw ParseError(Kind::UnknownKind, where + "/kind", "unknown perturbation kind '" + kind + "'");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_json(const std::vector<cplx>& v)
{
    json a = json::array();
    for (auto z : v) a.push_back(complex_json(z));
    return a;
}

json matrix_json(const CMatrix& m)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

OperatorModel parse_spec(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(Kind::Malformed, "byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw ParseError(Kind::Malformed, "", "document must be a JSON object");
    reject_unknown_keys(doc, {"dim", "norm", "base", "perturbation"}, "");

    const auto& dim_j = require(doc, "dim", "");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0)
        throw ParseError(Kind::InvalidValue, "/dim", "dim must be a positive integer");
    OperatorModel model;
    model.dim = dim_j.get<int>();

    const auto& norm_j = require(doc, "norm", "");
    if (!norm_j.is_string()) throw ParseError(Kind::Malformed, "/norm", "norm must be a string");
    const auto norm = norm_j.get<std::string>();
    if (norm != "l1" && norm != "l2" && norm != "linf")
        throw ParseError(Kind::UnknownKind, "/norm", "unknown norm '" + norm + "'");
    model.norm = parse_norm_kind(norm);

    model.base = parse_base(require(doc, "base", ""), model.dim);
    model.perturbation = parse_perturbation(require(doc, "perturbation", ""), model.dim);
    return model;
}

std::string serialize(const OperatorModel& model)
{
    json doc;
    doc["dim"] = model.dim;
    doc["norm"] = std::string(to_string(model.norm));
    doc["base"] = std::visit(overloaded{
                                 [](const ZeroOp&) { return json{{"kind", "zero"}}; },
                                 [](const ShiftOp&) { return json{{"kind", "shift"}}; },
                                 [](const DiagonalOp& d) { return json{{"kind", "diagonal"}, {"values", vector_json(d.values)}}; },
                                 [](const DenseOp& d) { return json{{"kind", "dense"}, {"entries", matrix_json(d.entries)}}; },
                             },
                             model.base);
    doc["perturbation"] = std::visit(
        overloaded{
            [](const ZeroOp&) { return json{{"kind", "zero"}}; },
            [](const RankOneOp& r) {
                return json{{"kind", "rank_one"}, {"left", vector_json(r.left)}, {"right", vector_json(r.right)}};
            },
            [](const DiagonalOp& d) { return json{{"kind", "diagonal"}, {"values", vector_json(d.values)}}; },
            [](const DenseOp& d) { return json{{"kind", "dense"}, {"entries", matrix_json(d.entries)}}; },
        },
        model.perturbation);
    return doc.dump();
}

} // namespace eigencount
