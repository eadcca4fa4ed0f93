#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commgraph/classify.hpp"
#include "commgraph/element.hpp"
#include "commgraph/finfield.hpp"
#include "commgraph/group.hpp"
#include "commgraph/matrix.hpp"
#include "commgraph/numtheory.hpp"
#include "commgraph/poly_matrix.hpp"

// The diameter-8 family: F is a unipotent subgroup of Sp(4, GF(q^r)), D is
// generated by x = z.beta and a diagonal element c of prime order t, and
// G = FD. F is far too large to enumerate, so everything on the F side works
// in coordinates (a, b, c, d, x) with x*a = b - d. That sign is the one for
// which these matrices preserve the form J and are closed under products.
namespace commgraph::family {

struct ParamTriple {
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t t = 0;
    auto operator<=>(const ParamTriple&) const = default;
};

inline constexpr ParamTriple kBaseParams{11, 5, 3221};

/// Empty string when valid, otherwise the first violated condition.
std::string params_problem(const ParamTriple& p);
/// Throws InvalidArgument naming the violated condition.
void validate_params(const ParamTriple& p);

/// Every q <= q_max paired with each admissible r and the least admissible t.
std::vector<ParamTriple> find_params(std::uint64_t q_max);

/// q^(4r) * r^2 * t.
BigInt example_group_order(const ParamTriple& p);

/// Coordinates of an element of F:
///   1 0  0 0
///   a 1  0 0
///   b x  1 0
///   c d -a 1
struct FCoords {
    ff::Value a = 0, b = 0, c = 0, d = 0, x = 0;
    auto operator<=>(const FCoords&) const = default;
};

bool satisfies_relation(const ff::FieldSpec& field, const FCoords& f);
ff::Matrix f_matrix(const ff::FieldPtr& field, const FCoords& f);
/// Inverse of f_matrix; nullopt when the matrix is not of that shape or the
/// relation fails.
std::optional<FCoords> f_coords(const ff::Matrix& m);

/// Generic F element over the variables base..base+3 = (a, b, c, x) of a
/// polynomial ring with `num_vars` variables; the d entry is b - x*a.
ff::PolyMatrix generic_f_element(const ff::FieldPtr& field, std::size_t num_vars, std::size_t base);

/// The alternating form
///    0  0 0 1
///    0  0 1 0
///    0 -1 0 0
///   -1  0 0 0
ff::Matrix symplectic_form(const ff::FieldPtr& field);

/// The fixed element of F used to build y = x^g (coordinates b = x = d = 1).
ff::Matrix conjugator_matrix(const ff::FieldPtr& field);

struct ExampleGroup {
    ParamTriple params;
    ff::FieldPtr field;
    ff::Matrix form;
    ff::Value z_eig_d = 0;  // diagonal entries of z are d, e, e^-1, d^-1
    ff::Value z_eig_e = 0;
    ff::Value c_eig_f = 0;  // c = diag(f, f, f^-1, f^-1)
    grp::MatrixAutElement z;
    grp::MatrixAutElement c;
    grp::MatrixAutElement x;  // z twisted by one Frobenius step
    grp::MatrixAutElement g;  // conjugator_matrix as a group element
    grp::GroupPtr d_group;    // D = <x, c>, materialized

    grp::GroupElement x_elem() const { return x; }
    grp::GroupElement c_elem() const { return c; }
    grp::MatrixAutElement x_power(std::int64_t n) const;
};

ExampleGroup build_example(const ParamTriple& p, ff::FieldOptions options = {},
                           std::size_t element_cap = grp::kDefaultElementCap);

struct SymplecticReport {
    bool z_ok = false;
    bool c_ok = false;
    bool g_ok = false;
    bool generic_ok = false;
    bool holds() const { return z_ok && c_ok && g_ok && generic_ok; }
};

bool is_symplectic(const ff::Matrix& a, const ff::Matrix& form);
SymplecticReport verify_symplectic(const ExampleGroup& eg);

struct DstructReport {
    BigInt exponent_sum;       // 1 + q + ... + q^(r-1)
    ff::Value x_r_corner = 0;  // top-left entry of x^r, equal to d^exponent_sum
    std::uint64_t x_order = 0;
    std::uint64_t x_r_order = 0;
    std::uint64_t c_order = 0;
    std::size_t d_order = 0;
    std::size_t center_order = 0;
};

/// Throws CheckFailed naming the failing clause.
DstructReport verify_dstruct(const ExampleGroup& eg);

struct CoordinateSolutions {
    std::string name;
    unsigned row = 0, col = 0;
    ff::Value multiplier = 0;  // scalar lambda_row^-1 * lambda_col
    std::vector<ff::Value> solutions;
};

struct FixedPointReport {
    std::uint32_t twist = 0;
    std::vector<CoordinateSolutions> coords;  // a, b, x, c, d
    BigInt count;
    std::string description;

    const CoordinateSolutions& coord(std::string_view name) const;
};

/// Solutions in F of w^-1 f w = f for w = (diagonal matrix, twist). Throws
/// NotNormalizing when w is not of that form or does not preserve F.
FixedPointReport fixed_points_in_F(const ExampleGroup& eg, const grp::MatrixAutElement& w);

struct CentralizerReport {
    grp::SubgroupHandle c_d;
    FixedPointReport c_f;
    BigInt order;
};

/// C_G(w) = C_D(w) C_F(w) for w in D#. Throws NotInD.
CentralizerReport centralizer_in_G(const ExampleGroup& eg, const grp::MatrixAutElement& w);

/// The one-parameter family {a in GF(q^r)} centralizing c, as a matrix in
/// the first variable of a ring with `num_vars` variables.
ff::PolyMatrix c_centralizer_family(const ff::FieldPtr& field, std::size_t num_vars, std::size_t var);

struct M3Report {
    bool certified = false;
    std::string method;       // "monomial" or "exhaustive-prime-field"
    std::string certificate;  // entry and polynomial of the commutator
    // The displayed conjugate family has 0 in the corner where g^-1 P(b) g has
    // -2b. The corner is central, so the commutator is the same; both are
    // certified.
    bool conjugate_family_matches_display = false;
    bool display_certified = false;
    bool holds() const { return certified && display_certified; }
};

/// Symbolic commutator of the family in `a` with the g-conjugate family in
/// `b`, where g-conjugation is b -> g^-1 b g. Throws SymbolicFailure when
/// neither the monomial certificate nor the exhaustive fallback succeeds.
M3Report verify_m3(const ExampleGroup& eg);

/// The g-conjugate of the c-centralizer family in the displayed form used
/// for the commutator certificate:
///    1  0  0 0
///    b  1  0 0
///   -b  0  1 0
///    0 -b -b 1
ff::PolyMatrix displayed_conjugate_family(const ff::FieldPtr& field, std::size_t num_vars, std::size_t var);

struct PathReport {
    std::vector<std::string> names;
    std::vector<grp::MatrixAutElement> path;
    std::size_t length() const { return path.empty() ? 0 : path.size() - 1; }
};

/// x ~ x^r ~ c ~ w ~ u ~ w* ~ c^g ~ (x^r)^g ~ y. Throws PathBroken.
PathReport witness_path8(const ExampleGroup& eg);

struct CenterReport {
    std::vector<std::string> constraints;  // polynomials forced to vanish
    std::vector<std::string> zero_coords;
    std::vector<std::string> free_coords;
    unsigned free_parameters = 0;
    BigInt order;  // |GF(q^r)|^free_parameters
};

/// Z(F) by symbolic commutation with a generic element. Throws
/// SymbolicFailure if the constraint system is not of monomial type.
CenterReport center_of_F(const ExampleGroup& eg);

struct Class3Report {
    bool commutator_nontrivial = false;
    bool triple_nontrivial = false;
    bool quadruple_trivial = false;
    std::string witness;  // a nonzero entry of the triple commutator
    bool holds() const { return commutator_nontrivial && triple_nontrivial && quadruple_trivial; }
};

Class3Report verify_f_class3(const ExampleGroup& eg);

struct NotFrobeniusReport {
    BigInt c_f_order;
    std::size_t d_center_order = 0;
    classify::VerdictKind d_kind = classify::VerdictKind::HasCentre;
    bool holds = false;
};

NotFrobeniusReport verify_not_frobenius_structure(const ExampleGroup& eg);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PaperReport {
    ParamTriple params;
    std::vector<CheckResult> checks;
    BigInt group_order;

    bool all_pass() const;
    const CheckResult* first_failure() const;
};

/// Runs the whole suite; individual check failures are recorded, not thrown.
/// Invalid parameters throw InvalidArgument before anything is built.
PaperReport run_paper_checks(const ParamTriple& p, ff::FieldOptions options = {});

/// {"params":{q,r,t},"checks":[{name,status,detail}],"group_order":"..."}
nlohmann::json to_json(const PaperReport& report);
nlohmann::json to_json(const ParamTriple& p);

}  // namespace commgraph::family
