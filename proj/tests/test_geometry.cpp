#include <doctest.h>

#include "gitstab/catalog.hpp"
#include "support.hpp"

using namespace gitstab;
using P = Polynomial<Rational>;

TEST_CASE("projective points canonicalize") {
    auto pt = ProjectivePoint<Rational>::of({Rational(0), Rational(2), Rational(-4)});
    CHECK(pt.coords[1].is_one());
    CHECK(pt.coords[2].str() == "-2");
    CHECK_THROWS_AS(ProjectivePoint<Rational>::of({Rational(0), Rational(0)}), DomainError);
}

TEST_CASE("two distinct lines meet in a node") {
    auto R = make_xring(3);
    Ideal<Rational> L1(R, {parse_polynomial<Rational>("x0", R)});
    Ideal<Rational> L2(R, {parse_polynomial<Rational>("x1", R)});
    auto pt = ProjectivePoint<Rational>::of({Rational(0), Rational(0), Rational(1)});
    auto prof = intersection_profile(L1, L2, pt);
    CHECK(prof.classification == ContactType::Node);
    CHECK(prof.local_multiplicity == 1);
    CHECK_FALSE(prof.tangents_coincide);

    auto sym = intersection_profile(L2, L1, pt);
    CHECK(sym.classification == prof.classification);
    CHECK(sym.local_multiplicity == prof.local_multiplicity);
}

TEST_CASE("tangent conics meet in a tacnode") {
    auto R = make_xring(3);
    // y*z = x^2 and y*z = -x^2 meet at [0,0,1] and [0,1,0] with contact 2
    Ideal<Rational> C1(R, {parse_polynomial<Rational>("x1*x2 - x0^2", R)});
    Ideal<Rational> C2(R, {parse_polynomial<Rational>("x1*x2 + x0^2", R)});
    auto pt = ProjectivePoint<Rational>::of({Rational(0), Rational(0), Rational(1)});
    auto prof = intersection_profile(C1, C2, pt);
    CHECK(prof.classification == ContactType::Tacnode);
    CHECK(prof.local_multiplicity == 2);
    CHECK(prof.tangents_coincide);
}

TEST_CASE("singular branch classifies as other with a diagnostic") {
    auto R = make_xring(3);
    // nodal cubic, singular at [0,0,1]
    Ideal<Rational> C(R, {parse_polynomial<Rational>("x1^2*x2 - x0^2*x2 - x0^3", R)});
    Ideal<Rational> L(R, {parse_polynomial<Rational>("x0", R)});
    auto pt = ProjectivePoint<Rational>::of({Rational(0), Rational(0), Rational(1)});
    auto prof = intersection_profile(C, L, pt);
    CHECK(prof.classification == ContactType::Other);
    CHECK(prof.diagnostic == "a branch is singular at the point");
}

TEST_CASE("point off a component is rejected") {
    auto R = make_xring(3);
    Ideal<Rational> L1(R, {parse_polynomial<Rational>("x0", R)});
    Ideal<Rational> L2(R, {parse_polynomial<Rational>("x1", R)});
    auto off = ProjectivePoint<Rational>::of({Rational(1), Rational(1), Rational(1)});
    CHECK_THROWS_AS(intersection_profile(L1, L2, off), DomainError);
}

TEST_CASE("local length of a fat point") {
    auto R = make_xring(3);
    Ideal<Rational> J(R, {parse_polynomial<Rational>("x1^2", R), parse_polynomial<Rational>("x2", R)});
    auto e0 = ProjectivePoint<Rational>::of({Rational(1), Rational(0), Rational(0)});
    CHECK(local_intersection_length(J, e0) == 2);
    auto away = ProjectivePoint<Rational>::of({Rational(1), Rational(1), Rational(0)});
    CHECK(local_intersection_length(J, away) == 0);
}

TEST_CASE("disjointness of skew lines") {
    auto R = make_xring(4);
    Ideal<Rational> L1(R, {parse_polynomial<Rational>("x0", R), parse_polynomial<Rational>("x1", R)});
    Ideal<Rational> L2(R, {parse_polynomial<Rational>("x2", R), parse_polynomial<Rational>("x3", R)});
    CHECK(projectively_disjoint(L1, L2));
    Ideal<Rational> L3(R, {parse_polynomial<Rational>("x0", R), parse_polynomial<Rational>("x2", R)});
    CHECK_FALSE(projectively_disjoint(L1, L3));
}

TEST_CASE("veronese image of a line is a conic") {
    auto ctx = catalog::specialized_context();
    Ideal<Rational> line(ctx.plane, {parse_polynomial<Rational>("x2", ctx.plane)});
    auto img = veronese2(line, ctx.p5);
    for (int m = 1; m <= 3; ++m) CHECK(hilbert_function(img, m) == 2 * m + 1);

    // parametrize-and-interpolate oracle: the image of [s,t] -> [s^2, st, t^2]
    std::vector<P> forms;
    for (const char* t : {"s^2", "t^2", "0", "s*t", "0", "0"})
        forms.push_back(parse_polynomial<Rational>(t, ctx.st));
    auto param_img = parametrization_image(ctx.st, forms, ctx.p5);
    CHECK(param_img.equals(img));
}

TEST_CASE("linear projection basics") {
    auto ctx = catalog::specialized_context();
    auto E = catalog::elliptic_p3(ctx);

    // identity map keeps the ideal
    std::vector<P> id;
    for (int i = 0; i < 4; ++i) id.push_back(P::variable(ctx.p3, i));
    auto same = linear_projection(E, id, ctx.p3);
    CHECK(same.equals(E));

    // projecting a plane conic from an external point keeps degree 2
    Ideal<Rational> conic(ctx.plane, {parse_polynomial<Rational>("x0*x2 - x1^2", ctx.plane)});
    // into P^1 coordinates (x0, x1): a double cover image is all of P^1, so
    // project from [0,0,1] back into the plane via a coordinate change instead
    std::vector<P> change = {P::variable(ctx.plane, 0) + P::variable(ctx.plane, 2),
                             P::variable(ctx.plane, 1), P::variable(ctx.plane, 2)};
    auto moved = linear_projection(conic, change, ctx.plane);
    CHECK(hilbert_function(moved, 3) - hilbert_function(moved, 2) == 2);  // degree 2 image

    // degenerate projection: a line projected from a point on it is a point
    auto R = ctx.plane;
    Ideal<Rational> line(R, {parse_polynomial<Rational>("x1", R)});
    std::vector<P> drop = {P::variable(R, 1), P::variable(R, 2), P::variable(R, 2)};
    CHECK_THROWS_AS(linear_projection(line, drop, R), DomainError);
}

TEST_CASE("decomposition verification catches wrong claims") {
    auto ctx = catalog::specialized_context();
    auto I = catalog::conjoined_snowmen(ctx);

    DecompositionClaim<Rational> trivial{I, {I}, {}};
    CHECK(verify_decomposition(trivial).verified);

    auto primes = catalog::snowmen_primes(ctx);
    DecompositionClaim<Rational> missing{I, {primes[0], primes[1], primes[2]}, {}};
    auto v = verify_decomposition(missing);
    CHECK_FALSE(v.verified);
    CHECK_FALSE(v.diagnostic.empty());

    DecompositionClaim<Rational> wrong_hf{I, primes, {{{1, 4}}, {}, {}, {}}};
    CHECK_FALSE(verify_decomposition(wrong_hf).verified);
}

TEST_CASE("conic certificates reject a non-matching parametrization") {
    auto ctx = catalog::specialized_context();
    auto primes = catalog::snowmen_primes(ctx);
    std::vector<P> wrong;
    for (const char* t : {"s^2", "0", "0", "0", "s*t", "-t^2"})
        wrong.push_back(parse_polynomial<Rational>(t, ctx.st));
    CHECK_FALSE(certify_conic(primes[0], ctx.st, wrong).verified);
}

TEST_CASE("profiles work over the parameter field") {
    // the node of B1 and B2 sits at [0,1,0,0,-beta,0]; check it symbolically
    auto ctx = catalog::symbolic_context();
    auto primes = catalog::i_star_primes(ctx);
    std::vector<RatFun> coords = {RatFun(0), RatFun(1), RatFun(0), RatFun(0),
                                  -ctx.val("beta"), RatFun(0)};
    auto pt = ProjectivePoint<RatFun>::of(coords);
    auto prof = intersection_profile(primes[1], primes[3], pt);
    CHECK(prof.classification == ContactType::Node);
}
