#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "avckit/builtin_channels.hpp"
#include "avckit/channel_graph.hpp"
#include "avckit/converse.hpp"
#include "avckit/rng.hpp"
#include "avckit/symmetrizability.hpp"
#include "test_oracles.hpp"

using namespace avckit;
using testing::brute_force_margin;
using testing::oracle_violation;
using testing::random_channel;

TEST_CASE("additive example: symmetrizability pattern matches the expected verdicts") {
    StateChannel ch = example1_channel();

    SymReport s = sym_margin(ch, SymVariant::S);
    CHECK(s.symmetrizable);
    CHECK(s.margin <= 1e-7);
    // the certificate must truly satisfy the defining equality
    CHECK(oracle_violation(ch, SymVariant::S, s.certificate) <= 1e-9);
    // the identity kernel T(j|s) = 1{j=s} is a known certificate
    Kernel ident(2, 2, 0.0);
    ident.at(0, 0) = 1.0;
    ident.at(1, 1) = 1.0;
    CHECK(oracle_violation(ch, SymVariant::S, ident) <= 1e-12);

    CHECK_FALSE(sym_margin(ch, SymVariant::XS).symmetrizable);
    CHECK_FALSE(sym_margin(ch, SymVariant::X).symmetrizable);
    CHECK(sym_margin(ch, SymVariant::XS).margin > 1e-3);
    CHECK(sym_margin(ch, SymVariant::X).margin > 1e-3);

    // induced description channel with U = X + S is nonsymmetrizable-U|X
    InducedChannel ind = induce_u_channel_sc(ch, Dist(3, 1.0 / 3), example1_u_equals_x_plus_s());
    SymReport ux = sym_margin(ind.avc, SymVariant::U_given_X);
    CHECK_FALSE(ux.symmetrizable);
    CHECK(ux.margin > 1e-3);
    CHECK(indicator_u_given_x(ch, Dist(3, 1.0 / 3), example1_u_equals_x_plus_s()) == 1);
}

TEST_CASE("indicator edge cases") {
    StateChannel ch = random_channel(2, 2, 2, 2, 21);
    // |U| = 1: no pair of descriptions to confuse
    Kernel uconst(4, 1, 1.0);
    CHECK(indicator_u_given_x(ch, {0.5, 0.5}, uconst) == 1);

    // state-blind U on a channel whose output ignores u: uniform T symmetrizes
    StateChannel blind = random_channel(2, 1, 2, 2, 22);  // |S|=1 removes the s dependence
    Kernel ufree(2, 2, 0.5);
    CHECK(indicator_u_given_x(blind, {0.5, 0.5}, ufree) == 0);
}

TEST_CASE("LP margins agree with the brute-force grid oracle on random channels") {
    std::vector<SymVariant> variants = {SymVariant::XS, SymVariant::X, SymVariant::S,
                                        SymVariant::X_given_S, SymVariant::S_given_X};
    for (int t = 0; t < 8; ++t) {
        StateChannel ch = random_channel(2, 2, 2, 2, 300 + t);
        for (SymVariant v : variants) {
            double lp = sym_margin(ch, v).margin;
            double grid = brute_force_margin(ch, v, 16);
            CHECK(lp <= grid + 1e-9);  // the LP optimum can never exceed a feasible probe
            CHECK(grid - lp <= 1e-2);
            CHECK((lp <= 1e-3) == (grid <= 1e-3));  // verdict agreement
        }
    }
}

TEST_CASE("constructed symmetrizable channels: margin 0 and variant monotonicity") {
    // W(y|x,s,j) = V(y|j): any constant T symmetrizes every variant
    for (int t = 0; t < 5; ++t) {
        StateChannel ch = random_channel(2, 2, 2, 3, 400 + t);
        for (int x = 0; x < 2; ++x)
            for (int s = 0; s < 2; ++s)
                for (int j = 0; j < 2; ++j)
                    for (int y = 0; y < 3; ++y) ch.wp(x, s, j, y) = ch.wp(0, 0, j, y);
        SymReport xs = sym_margin(ch, SymVariant::XS);
        CHECK(xs.symmetrizable);
        // symmetrizable-XS implies symmetrizable-S|X and -X|S
        CHECK(sym_margin(ch, SymVariant::S_given_X).symmetrizable);
        CHECK(sym_margin(ch, SymVariant::X_given_S).symmetrizable);
        // and the averaged AVC is symmetrizable-X, so its graph is complete
        AvChannel avc = average_out_state(ch);
        CHECK(sym_margin(avc, SymVariant::P2P_X).symmetrizable);
        CHECK(build_graph(avc).is_complete());
    }
}

TEST_CASE("degenerate single-letter channel reports vacuous margins") {
    StateChannel ch = random_channel(1, 1, 1, 1, 23);
    for (SymVariant v : {SymVariant::XS, SymVariant::X, SymVariant::S, SymVariant::X_given_S,
                         SymVariant::S_given_X}) {
        SymReport rep = sym_margin(ch, v);
        CHECK_FALSE(rep.symmetrizable);
        CHECK(std::isinf(rep.margin));
        CHECK(rep.num_constraints == 0);
    }
}

TEST_CASE("edge_test distances") {
    // disjoint point hulls at TV distance 2
    AvChannel far;
    far.n_in = 2;
    far.nj = 2;
    far.ny = 2;
    far.q = {1, 0, 1, 0, /* input 1 */ 0, 1, 0, 1};
    EdgeResult r = edge_test(far, 0, 1);
    CHECK(r.distance == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_FALSE(r.connected);

    // identical hulls: q(y|i,j) = 1{y=j}
    AvChannel same;
    same.n_in = 2;
    same.nj = 2;
    same.ny = 2;
    same.q = {1, 0, 0, 1, 1, 0, 0, 1};
    EdgeResult r2 = edge_test(same, 0, 1);
    CHECK(r2.distance == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r2.connected);

    CHECK(edge_test(same, 1, 1).distance == doctest::Approx(0.0));
    CHECK_THROWS_AS(edge_test(same, 0, 5), IndexError);
}

TEST_CASE("edge_test on the averaged binary example matches a fine grid scan") {
    AvChannel avc = average_out_state(binary_example_channel());
    EdgeResult r = edge_test(avc, 0, 1);
    CHECK(r.distance > 0.0);
    CHECK_FALSE(r.connected);

    // independent oracle: scan mixtures of both rows on a fine grid
    double best = 1e300;
    const int res = 400;
    for (int a = 0; a <= res; ++a)
        for (int b = 0; b <= res; ++b) {
            double q1 = static_cast<double>(a) / res, q2 = static_cast<double>(b) / res;
            double d = 0.0;
            for (int y = 0; y < 2; ++y) {
                double p1 = q1 * avc.qp(0, 0, y) + (1 - q1) * avc.qp(0, 1, y);
                double p2 = q2 * avc.qp(1, 0, y) + (1 - q2) * avc.qp(1, 1, y);
                d += std::fabs(p1 - p2);
            }
            best = std::min(best, d);
        }
    CHECK(r.distance == doctest::Approx(best).epsilon(1e-6));
    CHECK(r.distance == doctest::Approx(1.2).epsilon(1e-6));  // hand-computed hull gap
}

TEST_CASE("edge distances are symmetric with zero diagonal") {
    for (int t = 0; t < 5; ++t) {
        StateChannel ch = random_channel(3, 2, 2, 3, 500 + t);
        AvChannel avc = average_out_state(ch);
        ChannelGraph g = build_graph(avc);
        for (int i = 0; i < g.n; ++i) {
            CHECK(g.distance(i, i) == doctest::Approx(0.0));
            CHECK(g.connected(i, i));
            for (int j = 0; j < g.n; ++j) CHECK(g.distance(i, j) == doctest::Approx(g.distance(j, i)));
        }
    }
}

TEST_CASE("build_graph verdicts") {
    AvChannel avc = average_out_state(binary_example_channel());
    ChannelGraph g = build_graph(avc);
    CHECK_FALSE(g.is_complete());
    CHECK(g.has_isolated_pair());
    CHECK(g.isolated_pairs().size() == 1);

    AvChannel same;
    same.n_in = 2;
    same.nj = 2;
    same.ny = 2;
    same.q = {1, 0, 0, 1, 1, 0, 0, 1};
    CHECK(build_graph(same).is_complete());

    AvChannel single;
    single.n_in = 1;
    single.nj = 2;
    single.ny = 2;
    single.q = {1, 0, 0, 1};
    CHECK(build_graph(single).is_complete());
}

TEST_CASE("converse probe: complete-graph channel defeats every 2-message code") {
    // q(y|x,j) = 1{y=j}: the jammer chooses the output outright
    AvChannel avc;
    avc.n_in = 2;
    avc.nj = 2;
    avc.ny = 2;
    avc.q = {1, 0, 0, 1, 1, 0, 0, 1};

    const int n = 4;
    std::vector<Seq> codewords = {{0, 0, 0, 0}, {1, 1, 1, 1}};
    std::vector<int> decode(16);
    for (int yr = 0; yr < 16; ++yr) {
        int ones = __builtin_popcount(static_cast<unsigned>(yr));
        decode[yr] = ones * 2 > n ? 1 : 0;
    }
    ConverseResult r = converse_probe(avc, codewords, decode);
    CHECK(r.max_error >= 0.5 - 1e-9);
}

TEST_CASE("converse probe: matched code on a clean channel decodes perfectly") {
    // noiseless distinct outputs: y = x regardless of j
    AvChannel avc;
    avc.n_in = 2;
    avc.nj = 2;
    avc.ny = 2;
    avc.q = {1, 0, 1, 0, 0, 1, 0, 1};
    std::vector<Seq> codewords = {{0, 0, 0}, {1, 1, 1}};
    std::vector<int> decode(8);
    for (int yr = 0; yr < 8; ++yr) decode[yr] = (yr & 4) ? 1 : 0;  // first symbol decides
    ConverseResult r = converse_probe(avc, codewords, decode);
    CHECK(r.max_error == doctest::Approx(0.0));

    // a single-message code with the full decode set never errs
    std::vector<int> all_one(8, 0);
    ConverseResult r1 = converse_probe(avc, {Seq{0, 1, 0}}, all_one);
    CHECK(r1.max_error == doctest::Approx(0.0));
}

TEST_CASE("converse probe budget guard") {
    AvChannel avc;
    avc.n_in = 2;
    avc.nj = 2;
    avc.ny = 2;
    avc.q = {1, 0, 0, 1, 1, 0, 0, 1};
    std::vector<Seq> codewords = {Seq(16, 0), Seq(16, 1)};
    std::vector<int> decode(1 << 16, 0);
    CHECK_THROWS_AS(converse_probe(avc, codewords, decode, 1000), ExplosionGuard);
}
