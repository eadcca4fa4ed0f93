#include <doctest.h>

#include <set>

#include "commgraph/error.hpp"
#include "commgraph/paperfam.hpp"
#include "support.hpp"

using namespace commgraph;
using namespace commgraph::family;
using ff::Matrix;
using ff::PolyMatrix;
using ff::Value;
using grp::MatrixAutElement;

namespace {

// Built once; every test below only reads it.
const ExampleGroup& base()
{
    static const ExampleGroup eg = build_example(kBaseParams);
    return eg;
}

Value random_value(const ff::FieldSpec& f)
{
    return static_cast<Value>(testsupport::uniform(0, f.size() - 1));
}

FCoords random_coords(const ff::FieldSpec& f)
{
    FCoords c{random_value(f), random_value(f), random_value(f), 0, random_value(f)};
    c.d = f.sub(c.b, f.mul(c.x, c.a));
    return c;
}

MatrixAutElement as_elem(const Matrix& m)
{
    return MatrixAutElement(m, 0);
}

bool commute(const MatrixAutElement& a, const MatrixAutElement& b)
{
    return a * b == b * a;
}

// Least prime factor by plain trial division.
std::uint64_t trial_lpf(std::uint64_t n)
{
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Generic F element with the opposite sign convention, d = x*a + b.
PolyMatrix literal_f_element(const ff::FieldPtr& field)
{
    using ff::MultiPoly;
    const auto a = MultiPoly::variable(field, 4, 0), b = MultiPoly::variable(field, 4, 1);
    const auto c = MultiPoly::variable(field, 4, 2), x = MultiPoly::variable(field, 4, 3);
    auto m = PolyMatrix::identity(field, 4, 4);
    m.at(1, 0) = a;
    m.at(2, 0) = b;
    m.at(2, 1) = x;
    m.at(3, 0) = c;
    m.at(3, 1) = x * a + b;
    m.at(3, 2) = -a;
    return m;
}

}  // namespace

TEST_SUITE("paperfam") {

TEST_CASE("find_params examples")
{
    CHECK(find_params(11) == std::vector<ParamTriple>{{11, 5, 3221}});
    CHECK(find_params(7).empty());
    CHECK(find_params(3).empty());
    const auto p31 = find_params(31);
    REQUIRE(p31.size() == 4);
    CHECK(p31.back().q == 31);
    CHECK(p31.back().r == 5);
    // Independent: least prime factor of (31^5 - 1) / 30 that does not divide 30.
    std::uint64_t m = (ipow(31, 5) - 1) / 30;
    std::uint64_t t = 0;
    while (m > 1) {
        const auto p = trial_lpf(m);
        if (30 % p != 0) {
            t = p;
            break;
        }
        m /= p;
    }
    CHECK(p31.back().t == t);
    for (const auto& p : find_params(70)) CHECK(p.r != 3);
}

TEST_CASE("property: every found triple satisfies the defining arithmetic")
{
    const auto triples = find_params(70);
    CHECK(std::is_sorted(triples.begin(), triples.end()));
    CHECK(triples.size() >= 10);
    for (const auto& p : triples) {
        INFO(p.q << "," << p.r << "," << p.t);
        CHECK(nt::is_prime(p.q));
        CHECK(nt::is_prime(p.r));
        CHECK(p.r >= 5);
        CHECK((p.q - 1) % p.r == 0);
        CHECK((p.q - 1) % (p.r * p.r) != 0);
        CHECK(nt::is_prime(p.t));
        const BigInt rep = (nt::big_pow(p.q, static_cast<unsigned>(p.r)) - 1) / (p.q - 1);
        CHECK(rep % p.t == 0);
        CHECK((p.q - 1) % p.t != 0);
        CHECK(params_problem(p).empty());
        // Least t, where trial division is cheap enough to confirm it.
        if (p.t < 1'000'000) {
            for (std::uint64_t s = 2; s < p.t; ++s) {
                if (nt::is_prime(s) && (p.q - 1) % s != 0) CHECK(rep % s != 0);
            }
        }
    }
}

TEST_CASE("parameter validation")
{
    CHECK(params_problem(kBaseParams).empty());
    CHECK_FALSE(params_problem({11, 3, 3221}).empty());
    CHECK_FALSE(params_problem({13, 5, 3221}).empty());
    CHECK_FALSE(params_problem({11, 5, 5}).empty());
    CHECK_FALSE(params_problem({11, 5, 7}).empty());
    CHECK_FALSE(params_problem({9, 5, 3221}).empty());
    try {
        validate_params({11, 3, 1});
        FAIL("r = 3 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("example group order")
{
    CHECK(example_group_order(kBaseParams) == BigInt("54173193341944394740910525"));
    CHECK(example_group_order(kBaseParams) == nt::big_pow(11, 20) * 80525);
    CHECK(nt::big_pow(11, 20) == BigInt("672749994932560009201"));
}

TEST_CASE("build_example at the base triple")
{
    const auto& eg = base();
    const auto& f = *eg.field;
    CHECK(f.size() == 161051);
    CHECK(f.order_of(eg.z_eig_d) == 25);
    CHECK(f.order_of(eg.z_eig_e) == 25);
    CHECK(f.order_of(eg.c_eig_f) == 3221);
    const std::set<Value> four{f.pow(eg.z_eig_d, 5), f.pow(eg.z_eig_d, -5), f.pow(eg.z_eig_e, 5), f.pow(eg.z_eig_e, -5)};
    CHECK(four.size() == 4);
    CHECK(eg.d_group->order() == 80525);
    CHECK(grp::element_order(eg.x_elem()) == 25);
    CHECK(grp::element_order(grp::GroupElement(eg.x_power(5))) == 5);
    CHECK(grp::element_order(eg.c_elem()) == 3221);
    CHECK(eg.x.twist() == 1);
    CHECK(eg.z.matrix() == Matrix::diagonal(eg.field, {eg.z_eig_d, eg.z_eig_e, f.inv(eg.z_eig_e), f.inv(eg.z_eig_d)}));
    const Value fi = f.inv(eg.c_eig_f);
    CHECK(eg.c.matrix() == Matrix::diagonal(eg.field, {eg.c_eig_f, eg.c_eig_f, fi, fi}));
}

TEST_CASE("build_example rejects what it cannot build")
{
    try {
        build_example({13, 5, 3221});
        FAIL("invalid triple built");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    try {
        build_example({41, 5, 7});  // 41^5 exceeds the default field cap
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::InvalidArgument));
    }
}

TEST_CASE("symplectic checks")
{
    const auto& eg = base();
    CHECK(is_symplectic(Matrix::identity(eg.field, 4), eg.form));
    const auto rep = verify_symplectic(eg);
    CHECK(rep.z_ok);
    CHECK(rep.c_ok);
    CHECK(rep.g_ok);
    CHECK(rep.generic_ok);
    // Independent numeric check on sampled elements.
    for (int i = 0; i < 200; ++i) CHECK(is_symplectic(f_matrix(eg.field, random_coords(*eg.field)), eg.form));
}

TEST_CASE("the opposite sign of the F relation is not symplectic")
{
    const auto& eg = base();
    const auto j = PolyMatrix::from_matrix(eg.form, 4);
    const auto lit = literal_f_element(eg.field);
    const auto prod = lit * j * lit.transpose();
    CHECK_FALSE(prod == j);
    // Residue -2ax at (2,3), 2ax at (3,2), nothing else.
    const auto a = ff::MultiPoly::variable(eg.field, 4, 0), x = ff::MultiPoly::variable(eg.field, 4, 3);
    const auto two_ax = (a * x).scaled(eg.field->from_int(2));
    const auto diff = prod - j;
    CHECK(diff.at(2, 3) == -two_ax);
    CHECK(diff.at(3, 2) == two_ax);
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned c = 0; c < 4; ++c) {
            if ((r == 2 && c == 3) || (r == 3 && c == 2)) continue;
            CHECK(diff.at(r, c).is_zero());
        }
    }
    const auto gen = generic_f_element(eg.field, 4, 0);
    CHECK(gen * j * gen.transpose() == j);
}

TEST_CASE("property: F is closed under products and inverses")
{
    const auto& eg = base();
    const auto& f = *eg.field;
    int failures = 0;
    int literal_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_coords(f), q = random_coords(f);
        const auto prod = f_matrix(eg.field, p) * f_matrix(eg.field, q);
        if (!f_coords(prod) || !f_coords(f_matrix(eg.field, p).inverse())) ++failures;

        // Same with the opposite sign: products leave that set.
        auto lp = p, lq = q;
        lp.d = f.add(f.mul(lp.x, lp.a), lp.b);
        lq.d = f.add(f.mul(lq.x, lq.a), lq.b);
        Matrix mp = f_matrix(eg.field, {}), mq = mp;
        for (auto [m, c] : {std::pair<Matrix*, FCoords*>{&mp, &lp}, {&mq, &lq}}) {
            *m = Matrix::identity(eg.field, 4);
            m->set(1, 0, c->a);
            m->set(2, 0, c->b);
            m->set(2, 1, c->x);
            m->set(3, 0, c->c);
            m->set(3, 1, c->d);
            m->set(3, 2, f.neg(c->a));
        }
        const auto lprod = mp * mq;
        const Value pa = lprod.at(1, 0), pb = lprod.at(2, 0), px = lprod.at(2, 1), pd = lprod.at(3, 1);
        if (pd != f.add(f.mul(px, pa), pb)) ++literal_failures;
    }
    CHECK(failures == 0);
    CHECK(literal_failures > 900);
}

TEST_CASE("F coordinates round trip")
{
    const auto& eg = base();
    for (int i = 0; i < 200; ++i) {
        const auto c = random_coords(*eg.field);
        CHECK(satisfies_relation(*eg.field, c));
        CHECK(f_coords(f_matrix(eg.field, c)) == c);
    }
    const auto g = f_coords(conjugator_matrix(eg.field));
    REQUIRE(g);
    CHECK(*g == FCoords{0, 1, 0, 1, 1});
    CHECK(eg.g.matrix() == conjugator_matrix(eg.field));
    CHECK_FALSE(f_coords(eg.c.matrix()));
}

TEST_CASE("D structure")
{
    const auto& eg = base();
    const auto rep = verify_dstruct(eg);
    CHECK(rep.exponent_sum == 16105);
    CHECK(rep.exponent_sum == 1 + 11 + 121 + 1331 + 14641);
    CHECK(16105 % 25 == 5);
    CHECK(rep.x_r_corner == eg.field->pow(eg.z_eig_d, 16105));
    CHECK(rep.x_r_corner == eg.field->pow(eg.z_eig_d, 5));
    CHECK(eg.field->order_of(rep.x_r_corner) == 5);
    CHECK(rep.x_order == 25);
    CHECK(rep.x_r_order == 5);
    CHECK(rep.c_order == 3221);
    CHECK(rep.d_order == 80525);
    CHECK(rep.center_order == 5);

    // c^x = c^q and [x^r, c] = 1, by direct multiplication.
    CHECK(eg.x.inverse() * eg.c * eg.x == std::get<MatrixAutElement>(grp::power(eg.c_elem(), 11)));
    CHECK(commute(eg.x_power(5), eg.c));
    CHECK(eg.x_power(5).matrix().is_diagonal());
    CHECK(eg.x_power(5).twist() == 0);
}

TEST_CASE("property: conjugation by a twisted diagonal acts entrywise")
{
    // w^-1 M w = beta^i(L^-1 M L) for w = (L, i); this is what the fixed-point
    // solver assumes.
    const auto& eg = base();
    const auto& f = *eg.field;
    for (int k = 0; k < 300; ++k) {
        const auto n = static_cast<std::int64_t>(testsupport::uniform(1, 24));
        const auto w = eg.x_power(n);
        const auto m = f_matrix(eg.field, random_coords(f));
        const auto lhs = (w.inverse() * as_elem(m) * w);
        CHECK(lhs.twist() == 0);
        const Matrix& l = w.matrix();
        Matrix expect(eg.field, 4);
        for (unsigned r = 0; r < 4; ++r) {
            for (unsigned c = 0; c < 4; ++c) {
                const Value s = f.mul(f.mul(f.inv(l.at(r, r)), m.at(r, c)), l.at(c, c));
                expect.set(r, c, f.frobenius(s, w.twist()));
            }
        }
        CHECK(lhs.matrix() == expect);
    }
}

TEST_CASE("fixed points in F")
{
    const auto& eg = base();
    const auto zr = MatrixAutElement(Matrix(eg.z.matrix()), 0);
    const auto zr5 = std::get<MatrixAutElement>(grp::power(grp::GroupElement(zr), 5));
    CHECK(fixed_points_in_F(eg, zr5).count == 1);
    CHECK(fixed_points_in_F(eg, eg.x).count == 1);
    const auto fc = fixed_points_in_F(eg, eg.c);
    CHECK(fc.count == 161051);  // q^r, see the note in the README
    CHECK(fc.coord("a").solutions.size() == 161051);
    for (const char* name : {"b", "x", "c", "d"}) CHECK(fc.coord(name).solutions == std::vector<Value>{0});
    try {
        fixed_points_in_F(eg, eg.g);
        FAIL("non-diagonal accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormalizing);
    }
}

TEST_CASE("C_F(c) oracle by brute force over GF(3^2)")
{
    // Same shape at a field small enough to enumerate F: 9^4 elements.
    const auto f = ff::field_create(3, 2);
    Value fe = 0;
    for (Value v = 1; v < 9; ++v) {
        if (f->order_of(v) == 4) {
            fe = v;
            break;
        }
    }
    REQUIRE(fe != 0);
    const auto c = as_elem(Matrix::diagonal(f, {fe, fe, f->inv(fe), f->inv(fe)}));
    std::size_t count = 0;
    for (Value a = 0; a < 9; ++a)
        for (Value b = 0; b < 9; ++b)
            for (Value cc = 0; cc < 9; ++cc)
                for (Value x = 0; x < 9; ++x) {
                    FCoords p{a, b, cc, f->sub(b, f->mul(x, a)), x};
                    if (commute(as_elem(f_matrix(f, p)), c)) ++count;
                }
    CHECK(count == 9);
}

TEST_CASE("property: sampled C_F(c) membership at the base triple")
{
    const auto& eg = base();
    const auto& f = *eg.field;
    for (int i = 0; i < 300; ++i) {
        const Value a = random_value(f);
        CHECK(commute(as_elem(f_matrix(eg.field, {a, 0, 0, 0, 0})), eg.c));
        const auto p = random_coords(f);
        const bool only_a = p.b == 0 && p.c == 0 && p.d == 0 && p.x == 0;
        CHECK(commute(as_elem(f_matrix(eg.field, p)), eg.c) == only_a);
        if (!(p == FCoords{})) CHECK_FALSE(commute(as_elem(f_matrix(eg.field, p)), eg.x));
    }
}

TEST_CASE("centralizers in G")
{
    const auto& eg = base();
    const auto cx = centralizer_in_G(eg, eg.x);
    CHECK(cx.c_d.order() == 25);
    CHECK(cx.c_f.count == 1);
    CHECK(cx.order == 25);
    CHECK(cx.c_d == grp::subgroup_generated(eg.d_group, {eg.d_group->require_index(eg.x_elem())}));

    const auto cxr = centralizer_in_G(eg, eg.x_power(5));
    CHECK(cxr.c_d.is_whole());
    CHECK(cxr.order == 80525);

    const auto cc = centralizer_in_G(eg, eg.c);
    CHECK(cc.c_d.order() == 16105);
    CHECK(cc.c_f.count == 161051);
    CHECK(cc.order == BigInt(16105) * 161051);
    CHECK(cc.order == BigInt("2593726355"));

    try {
        centralizer_in_G(eg, eg.g);
        FAIL("element outside D accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInD);
    }
}

TEST_CASE("property: sampled centralizer consistency")
{
    const auto& eg = base();
    const auto& d = eg.d_group;
    const auto cc = centralizer_in_G(eg, eg.c);
    // C_D part agrees with a direct scan of D.
    std::size_t scan = 0;
    for (const auto& e : d->elements()) scan += grp::commute(e, eg.c_elem());
    CHECK(scan == cc.c_d.order());

    // Products f*d' with f in C_F(c) and d' in C_D(c) commute with c, and the
    // product of two such elements is again of that form.
    const auto& members = cc.c_d.members();
    int failures = 0;
    for (int i = 0; i < 300; ++i) {
        auto sample = [&] {
            const Value a = random_value(*eg.field);
            const auto dp = std::get<MatrixAutElement>(d->element(members[testsupport::uniform(0, members.size() - 1)]));
            return as_elem(f_matrix(eg.field, {a, 0, 0, 0, 0})) * dp;
        };
        const auto u = sample(), v = sample();
        if (!commute(u, eg.c) || !commute(u * v, eg.c) || !commute(u.inverse(), eg.c)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("commutator certificate")
{
    const auto& eg = base();
    const auto rep = verify_m3(eg);
    CHECK(rep.certified);
    CHECK(rep.display_certified);
    CHECK(rep.method == "monomial");
    CHECK_FALSE(rep.certificate.empty());
    CHECK_FALSE(rep.conjugate_family_matches_display);

    const auto fam = c_centralizer_family(eg.field, 2, 0);
    CHECK(fam.evaluate({0, 0}).is_identity());
    const auto disp = displayed_conjugate_family(eg.field, 2, 1);
    CHECK(ff::unipotent_commutator(fam, disp).evaluate({0, 7}).is_identity());

    // a = b = 1 with the true conjugate g^-1 P(1) g.
    const auto p1 = as_elem(f_matrix(eg.field, {1, 0, 0, 0, 0}));
    const auto q1 = eg.g.inverse() * p1 * eg.g;
    const auto comm = p1.inverse() * q1.inverse() * p1 * q1;
    CHECK_FALSE(comm.is_identity());
    CHECK(comm.matrix().at(3, 0) == 2);
    // The true conjugate differs from the displayed family only in the corner.
    const auto shown = disp.evaluate({0, 1});
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned c = 0; c < 4; ++c)
            if (!(r == 3 && c == 0)) CHECK(q1.matrix().at(r, c) == shown.at(r, c));
    CHECK(q1.matrix().at(3, 0) == eg.field->from_int(-2));
    CHECK(shown.at(3, 0) == 0);
}

TEST_CASE("property: commutator certificate 2ab on sampled parameters")
{
    const auto& eg = base();
    const auto& f = *eg.field;
    for (int i = 0; i < 300; ++i) {
        const Value a = random_value(f), b = random_value(f);
        const auto pa = as_elem(f_matrix(eg.field, {a, 0, 0, 0, 0}));
        const auto pb = eg.g.inverse() * as_elem(f_matrix(eg.field, {b, 0, 0, 0, 0})) * eg.g;
        const auto comm = pa.inverse() * pb.inverse() * pa * pb;
        CHECK(comm.matrix().at(3, 0) == f.mul(2, f.mul(a, b)));
        CHECK(comm.is_identity() == (a == 0 || b == 0));
    }
}

TEST_CASE("witness path of length 8")
{
    const auto& eg = base();
    const auto rep = witness_path8(eg);
    REQUIRE(rep.path.size() == 9);
    CHECK(rep.length() == 8);
    CHECK(rep.names.front() == "x");
    CHECK(rep.names.back() == "y");
    CHECK(rep.path.front() == eg.x);
    CHECK(rep.path.back() == eg.g.inverse() * eg.x * eg.g);
    std::set<grp::GroupElement, testsupport::CanonLess> distinct;
    for (const auto& e : rep.path) {
        CHECK_FALSE(e.is_identity());
        distinct.insert(e);
    }
    CHECK(distinct.size() == 9);
    // Adjacency exactly as in the commuting graph: distinct and commuting.
    for (std::size_t i = 0; i + 1 < rep.path.size(); ++i) {
        CHECK(rep.path[i] != rep.path[i + 1]);
        CHECK(grp::commute(rep.path[i], rep.path[i + 1]));
    }
    // x and y themselves do not commute.
    CHECK_FALSE(grp::commute(rep.path.front(), rep.path.back()));
}

TEST_CASE("centre of F")
{
    const auto& eg = base();
    const auto rep = center_of_F(eg);
    CHECK(rep.free_parameters == 1);
    CHECK(rep.free_coords == std::vector<std::string>{"c"});
    CHECK(rep.order == 161051);
    const auto& f = *eg.field;
    for (int i = 0; i < 300; ++i) {
        const auto u = as_elem(f_matrix(eg.field, {0, 0, random_value(f), 0, 0}));
        CHECK(commute(u, as_elem(f_matrix(eg.field, random_coords(f)))));
        // Anything with a nonzero a, b or x coordinate is not central.
        auto p = random_coords(f);
        if (p.a == 0 && p.b == 0 && p.x == 0) continue;
        bool central = true;
        for (const FCoords probe : {FCoords{1, 0, 0, 0, 0}, FCoords{0, 1, 0, 1, 0}, FCoords{0, 0, 0, 0, 1}}) {
            central = central && commute(as_elem(f_matrix(eg.field, p)), as_elem(f_matrix(eg.field, probe)));
        }
        CHECK_FALSE(central);
    }
}

TEST_CASE("F has nilpotency class 3")
{
    const auto rep = verify_f_class3(base());
    CHECK(rep.commutator_nontrivial);
    CHECK(rep.triple_nontrivial);
    CHECK(rep.quadruple_trivial);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("not a Frobenius group")
{
    const auto rep = verify_not_frobenius_structure(base());
    CHECK(rep.holds);
    CHECK(rep.c_f_order == 161051);
    CHECK(rep.d_center_order == 5);
    CHECK(rep.d_kind == classify::VerdictKind::HasCentre);
}

TEST_CASE("full check suite at the base triple")
{
    const auto rep = run_paper_checks(kBaseParams);
    CHECK(rep.all_pass());
    CHECK(rep.first_failure() == nullptr);
    CHECK(rep.checks.size() == 15);
    const auto j = to_json(rep);
    CHECK(j["group_order"] == "54173193341944394740910525");
    CHECK(j["params"]["q"] == 11);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
    try {
        run_paper_checks({11, 3, 3221});
        FAIL("invalid triple accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("second triple (31, 5, t) with a raised field cap")
{
    const auto triples = find_params(31);
    REQUIRE(triples.size() == 4);
    const auto p = triples.back();
    const ff::FieldOptions big{std::uint64_t{1} << 25, std::uint64_t{1} << 25};
    const auto eg = build_example(p, big);
    CHECK(eg.d_group->order() == p.r * p.r * p.t);
    CHECK(verify_symplectic(eg).holds());
    CHECK(verify_dstruct(eg).center_order == p.r);
    CHECK(fixed_points_in_F(eg, eg.x_power(static_cast<std::int64_t>(p.r))).count == 1);
    CHECK(fixed_points_in_F(eg, eg.x).count == 1);
    CHECK(fixed_points_in_F(eg, eg.c).count == nt::big_pow(p.q, static_cast<unsigned>(p.r)));
    CHECK(verify_m3(eg).holds());
    CHECK(witness_path8(eg).length() == 8);
    CHECK(verify_not_frobenius_structure(eg).holds);
}

}  // TEST_SUITE
