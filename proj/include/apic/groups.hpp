#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "apic/errors.hpp"
#include "apic/linalg.hpp"
#include "apic/numeric.hpp"

// Structured abelian groups: finitely generated groups extended with k*-,
// k+-, W- and abelian-variety sectors, where k is algebraically closed of
// characteristic zero and W denotes the k-vector space y^{-1}k[y^{-1}].
// These are the answer objects for every divisor-class computation here.
namespace apic::groups {

using linalg::IntMatrix;
using linalg::RatMatrix;

using Json = nlohmann::ordered_json;

inline Json bigint_to_json(const BigInt& v) {
    static const BigInt lo = BigInt("-9007199254740991");
    static const BigInt hi = BigInt("9007199254740991");
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw config_error("expected an integer, got " + j.dump());
}

inline Json rational_to_json(const Rational& v) {
    if (denominator(v) == 1) return bigint_to_json(numerator(v));
    return to_string(v);
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw config_error("expected a rational, got " + j.dump());
}

// Renormalize arbitrary torsion factors (each >= 2) to a divisibility chain
// d_1 | d_2 | ... via the Smith form of their diagonal presentation.
inline std::vector<BigInt> normalize_torsion(const std::vector<BigInt>& factors) {
    for (const auto& f : factors)
        if (f < 2) throw invalid_argument_error("torsion factor below 2");
    IntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
    return linalg::cokernel_invariants(diag).factors;
}

struct StructuredGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;  // divisibility chain, entries >= 2
    long long unit_rank = 0;      // copies of k*
    long long additive_rank = 0;  // copies of k+
    long long w_rank = 0;         // copies of W
    long long abelian_dim = 0;    // dimension of the abelian-variety part

    bool operator==(const StructuredGroup& o) const = default;

    bool is_trivial() const {
        return free_rank == 0 && torsion.empty() && unit_rank == 0 &&
               additive_rank == 0 && w_rank == 0 && abelian_dim == 0;
    }

    void validate() const {
        if (free_rank < 0 || unit_rank < 0 || additive_rank < 0 || w_rank < 0 ||
            abelian_dim < 0)
            throw invalid_argument_error("negative sector rank");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw invalid_argument_error("torsion factor below 2");
            if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
                throw invalid_argument_error("torsion factors are not a divisibility chain");
        }
    }
};

// Convenience constructor; renormalizes the torsion list.
inline StructuredGroup sg(long long free_rank, std::vector<BigInt> torsion = {},
                          long long unit_rank = 0, long long additive_rank = 0,
                          long long w_rank = 0, long long abelian_dim = 0) {
    StructuredGroup g{free_rank, normalize_torsion(torsion),
                      unit_rank, additive_rank, w_rank, abelian_dim};
    g.validate();
    return g;
}

inline StructuredGroup canonical_form(const StructuredGroup& g) {
    return sg(g.free_rank, g.torsion, g.unit_rank, g.additive_rank, g.w_rank,
              g.abelian_dim);
}

inline bool is_isomorphic(const StructuredGroup& g, const StructuredGroup& h) {
    return canonical_form(g) == canonical_form(h);
}

inline StructuredGroup direct_sum(const StructuredGroup& g, const StructuredGroup& h) {
    std::vector<BigInt> torsion = g.torsion;
    torsion.insert(torsion.end(), h.torsion.begin(), h.torsion.end());
    return sg(g.free_rank + h.free_rank, torsion, g.unit_rank + h.unit_rank,
              g.additive_rank + h.additive_rank, g.w_rank + h.w_rank,
              g.abelian_dim + h.abelian_dim);
}

// "Z^a (+) Z/d1 (+) ... (+) (k*)^b (+) (k+)^c (+) W^w (+) A^g", exponent 1
// omitted, "0" for the trivial group.
inline std::string render(const StructuredGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " (+) ";
        first = false;
    };
    auto power = [&](const std::string& base, const std::string& wrapped, long long e) {
        if (e <= 0) return;
        sep();
        if (e == 1)
            out << base;
        else
            out << wrapped << "^" << e;
    };
    power("Z", "Z", g.free_rank);
    for (const auto& d : g.torsion) {
        sep();
        out << "Z/" << d.str();
    }
    power("k*", "(k*)", g.unit_rank);
    power("k+", "(k+)", g.additive_rank);
    power("W", "W", g.w_rank);
    power("A", "A", g.abelian_dim);
    return out.str();
}

// Field order is part of the interface.
inline Json to_json(const StructuredGroup& g) {
    Json j;
    j["free"] = g.free_rank;
    j["torsion"] = Json::array();
    for (const auto& d : g.torsion) j["torsion"].push_back(bigint_to_json(d));
    j["units"] = g.unit_rank;
    j["additive"] = g.additive_rank;
    j["w"] = g.w_rank;
    j["abelian"] = g.abelian_dim;
    return j;
}

inline StructuredGroup group_from_json(const Json& j) {
    std::vector<BigInt> torsion;
    if (j.contains("torsion"))
        for (const auto& d : j.at("torsion")) torsion.push_back(bigint_from_json(d));
    return sg(j.value("free", 0LL), torsion, j.value("units", 0LL),
              j.value("additive", 0LL), j.value("w", 0LL), j.value("abelian", 0LL));
}

// A unit of k*: an explicit nonzero rational, or a root of unity
// e^{2 pi i a/n} stored as the reduced turn fraction a/n. Roots of unity are
// exactly the torsion of k*, which is what the s.t.c.i. tests consume.
class UnitValue {
public:
    UnitValue() : value_(Rational(1)) {}

    static UnitValue rational(const Rational& v) {
        if (v == 0) throw invalid_argument_error("unit value must be nonzero");
        return UnitValue(v);
    }

    // primitive n-th root of unity (the turn 1/n)
    static UnitValue root_of_unity(const BigInt& order) {
        if (order < 1) throw invalid_argument_error("root of unity order must be >= 1");
        return turn(Rational(1, order));
    }

    // e^{2 pi i q}; q taken mod 1 and reduced
    static UnitValue turn(const Rational& q) {
        Rational r = q - BigInt(numerator(q) / denominator(q));
        if (r < 0) r += 1;
        return UnitValue(Turn{r});
    }

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational_value() const { return std::get<Rational>(value_); }
    const Rational& turn_value() const { return std::get<Turn>(value_).q; }

    bool is_root_of_unity() const {
        if (is_rational()) {
            const Rational& v = rational_value();
            return v == 1 || v == -1;
        }
        return true;
    }

    // order in k*, nullopt = infinite
    std::optional<BigInt> order() const {
        if (is_rational()) {
            if (rational_value() == 1) return BigInt(1);
            if (rational_value() == -1) return BigInt(2);
            return std::nullopt;
        }
        return BigInt(denominator(turn_value()));
    }

    UnitValue pow(const BigInt& e) const {
        if (is_rational())
            return UnitValue(rat_pow(rational_value(), static_cast<long long>(e)));
        return turn(turn_value() * Rational(e));
    }

    UnitValue operator*(const UnitValue& o) const {
        if (is_rational() && o.is_rational())
            return UnitValue(rational_value() * o.rational_value());
        return turn(as_turn() + o.as_turn());
    }

    UnitValue negated() const {  // multiplication by -1
        if (is_rational()) return UnitValue(Rational(-rational_value()));
        return turn(turn_value() + Rational(1, 2));
    }

    std::string str() const {
        if (is_rational()) return to_string(rational_value());
        const Rational& q = turn_value();
        if (q == 0) return "1";
        if (q == Rational(1, 2)) return "-1";
        return "e(" + to_string(q) + ")";  // e(q) = exp(2 pi i q)
    }

    bool is_one() const {
        if (is_rational()) return rational_value() == 1;
        return turn_value() == 0;
    }

private:
    struct Turn {
        Rational q;
    };

    explicit UnitValue(Rational v) : value_(std::move(v)) {}
    explicit UnitValue(Turn t) : value_(std::move(t)) {}

    // only valid for roots of unity
    Rational as_turn() const {
        if (!is_rational()) return turn_value();
        if (rational_value() == 1) return Rational(0);
        if (rational_value() == -1) return Rational(1, 2);
        throw invalid_argument_error("non-torsion rational unit has no turn form");
    }

    std::variant<Rational, Turn> value_;
};

struct WCoordinate {
    bool zero = true;
    // W elements are tracked as zero/nonzero plus an optional leading
    // coefficient; that is all the torsion bookkeeping ever needs.
    std::optional<Rational> leading;
};

struct GroupElement {
    StructuredGroup group;
    std::vector<BigInt> free_coords;
    std::vector<BigInt> torsion_coords;  // reduced mod the matching d_i
    std::vector<UnitValue> units;
    std::vector<Rational> additive;
    std::vector<WCoordinate> w;
    std::vector<std::string> abelian;  // opaque symbols, "" = zero

    void validate() const {
        if (free_coords.size() != static_cast<std::size_t>(group.free_rank) ||
            torsion_coords.size() != group.torsion.size() ||
            units.size() != static_cast<std::size_t>(group.unit_rank) ||
            additive.size() != static_cast<std::size_t>(group.additive_rank) ||
            w.size() != static_cast<std::size_t>(group.w_rank) ||
            abelian.size() != static_cast<std::size_t>(group.abelian_dim))
            throw dimension_error("element coordinates do not match the sector ranks");
    }
};

inline GroupElement identity_element(const StructuredGroup& g) {
    GroupElement e;
    e.group = g;
    e.free_coords.assign(g.free_rank, BigInt(0));
    e.torsion_coords.assign(g.torsion.size(), BigInt(0));
    e.units.assign(g.unit_rank, UnitValue());
    e.additive.assign(g.additive_rank, Rational(0));
    e.w.assign(g.w_rank, WCoordinate{});
    e.abelian.assign(g.abelian_dim, std::string{});
    return e;
}

enum class Tri { yes, no, unknown };

// Torsion test. k+ and W are torsion free in characteristic zero, so any
// nonzero coordinate there kills torsion; units must be roots of unity;
// nonzero abelian coordinates are not computed with, hence "unknown".
inline Tri element_is_torsion(const GroupElement& e) {
    e.validate();
    for (const auto& a : e.abelian)
        if (!a.empty() && a != "0") return Tri::unknown;
    for (const auto& c : e.free_coords)
        if (c != 0) return Tri::no;
    for (const auto& c : e.additive)
        if (c != 0) return Tri::no;
    for (const auto& c : e.w)
        if (!c.zero) return Tri::no;
    for (const auto& uv : e.units)
        if (!uv.is_root_of_unity()) return Tri::no;
    return Tri::yes;
}

struct OrderResult {
    Tri finite = Tri::yes;
    BigInt value = 1;  // meaningful only when finite == yes
};

inline OrderResult element_order(const GroupElement& e) {
    switch (element_is_torsion(e)) {
        case Tri::unknown:
            return {Tri::unknown, 0};
        case Tri::no:
            return {Tri::no, 0};
        case Tri::yes:
            break;
    }
    BigInt ord = 1;
    for (std::size_t i = 0; i < e.torsion_coords.size(); ++i) {
        const BigInt& d = e.group.torsion[i];
        BigInt c = e.torsion_coords[i] % d;
        if (c < 0) c += d;
        if (c != 0) ord = big_lcm(ord, d / big_gcd(c, d));
    }
    for (const auto& uv : e.units) ord = big_lcm(ord, *uv.order());
    return {Tri::yes, ord};
}

// e scaled by an integer; used by the order/identity consistency checks.
inline GroupElement scaled(const GroupElement& e, const BigInt& k) {
    GroupElement out = e;
    for (auto& c : out.free_coords) c *= k;
    for (std::size_t i = 0; i < out.torsion_coords.size(); ++i) {
        const BigInt& d = out.group.torsion[i];
        BigInt c = (out.torsion_coords[i] * k) % d;
        if (c < 0) c += d;
        out.torsion_coords[i] = c;
    }
    for (auto& uv : out.units) uv = uv.pow(k);
    for (auto& c : out.additive) c *= Rational(k);
    for (auto& c : out.w) {
        if (k == 0) c = WCoordinate{};
        else if (c.leading.has_value()) c.leading = *c.leading * Rational(k);
    }
    if (k == 0)
        for (auto& a : out.abelian) a.clear();
    return out;
}

// Block-diagonal homomorphism between structured groups. The free matrix
// maps the free (+ torsion) generators of the source into the free (+
// torsion) presentation of the target: rows = target free + torsion
// generators, columns = source free + torsion generators. The unit map is a
// monomial map given by its exponent matrix, the additive map is k-linear,
// and the W sector carries only a declared image rank since W is an
// infinite-dimensional k-vector space.
struct SectorHom {
    StructuredGroup source;
    StructuredGroup target;
    IntMatrix free_matrix;
    IntMatrix unit_exponents;
    RatMatrix additive_matrix;
    long long w_image_rank = 0;

    void validate() const {
        source.validate();
        target.validate();
        const std::size_t src_gens = source.free_rank + source.torsion.size();
        const std::size_t tgt_gens = target.free_rank + target.torsion.size();
        if (free_matrix.rows() != tgt_gens || free_matrix.cols() != src_gens)
            throw dimension_error("free sector matrix does not match the presentations");
        if (unit_exponents.rows() != static_cast<std::size_t>(target.unit_rank) ||
            unit_exponents.cols() != static_cast<std::size_t>(source.unit_rank))
            throw dimension_error("unit exponent matrix does not match the unit ranks");
        if (additive_matrix.rows() != static_cast<std::size_t>(target.additive_rank) ||
            additive_matrix.cols() != static_cast<std::size_t>(source.additive_rank))
            throw dimension_error("additive matrix does not match the additive ranks");
        if (w_image_rank < 0 || w_image_rank > source.w_rank || w_image_rank > target.w_rank)
            throw dimension_error("W image rank exceeds a W sector rank");
    }
};

inline SectorHom identity_hom(const StructuredGroup& g) {
    SectorHom f;
    f.source = g;
    f.target = g;
    f.free_matrix = IntMatrix::identity(g.free_rank + g.torsion.size());
    f.unit_exponents = IntMatrix::identity(g.unit_rank);
    f.additive_matrix = RatMatrix(g.additive_rank, g.additive_rank);
    for (long long i = 0; i < g.additive_rank; ++i) f.additive_matrix(i, i) = 1;
    f.w_image_rank = g.w_rank;
    return f;
}

inline SectorHom zero_hom(const StructuredGroup& src, const StructuredGroup& tgt) {
    SectorHom f;
    f.source = src;
    f.target = tgt;
    f.free_matrix = IntMatrix(tgt.free_rank + tgt.torsion.size(),
                              src.free_rank + src.torsion.size());
    f.unit_exponents = IntMatrix(tgt.unit_rank, src.unit_rank);
    f.additive_matrix = RatMatrix(tgt.additive_rank, src.additive_rank);
    f.w_image_rank = 0;
    return f;
}

// Cokernel of a sector homomorphism.
//   free/torsion: Smith form of the image columns stacked with the target
//     presentation relations;
//   units: k* is divisible, so no torsion appears and the quotient is free
//     of rank q - rank(exponent matrix);
//   additive/W: k-vector space rank bookkeeping;
//   abelian: passed through; maps out of an abelian part are refused.
inline StructuredGroup cokernel(const SectorHom& f) {
    f.validate();
    if (f.source.abelian_dim != 0)
        throw abelian_hom_error(
            "cokernel with a nontrivial abelian source is not defined here");

    const std::size_t tgt_gens = f.target.free_rank + f.target.torsion.size();
    IntMatrix stacked(tgt_gens, f.free_matrix.cols() + f.target.torsion.size());
    for (std::size_t i = 0; i < tgt_gens; ++i)
        for (std::size_t j = 0; j < f.free_matrix.cols(); ++j)
            stacked(i, j) = f.free_matrix(i, j);
    for (std::size_t t = 0; t < f.target.torsion.size(); ++t)
        stacked(f.target.free_rank + t, f.free_matrix.cols() + t) = f.target.torsion[t];

    const auto inv = linalg::cokernel_invariants(stacked);
    const long long unit = f.target.unit_rank -
                           static_cast<long long>(linalg::integer_rank(f.unit_exponents));
    const long long additive = f.target.additive_rank -
                               static_cast<long long>(linalg::rational_rank(f.additive_matrix));
    return sg(static_cast<long long>(inv.free_rank), inv.factors, unit, additive,
              f.target.w_rank - f.w_image_rank, f.target.abelian_dim);
}

}  // namespace apic::groups
