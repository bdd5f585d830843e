#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qtri/config.hpp"
#include "qtri/laurent.hpp"
#include "qtri/linalg.hpp"
#include "qtri/report.hpp"

#include <json.hpp>

using namespace qtri;

namespace {
Params testParams() {
    Params p;
    p.s = {1.23, 0.11};
    p.c0 = {0.9, -0.4};
    return p;
}
}  // namespace

TEST_CASE("q-integers") {
    // [3]_s at s = 2: (8 - 1/8) / (2 - 1/2) = 5.25.
    CHECK(std::abs(qnum(3, Cplx{2.0, 0.0}) - Cplx{5.25, 0.0}) < 1e-15);
    Cplx s{1.3, 0.2};
    CHECK(std::abs(qnum(1, s) - Cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(qnum(0, s)) < 1e-15);
    CHECK(std::abs(qnum(-4, s) + qnum(4, s)) < 1e-14);
}

TEST_CASE("integer powers match std::pow") {
    Cplx z{0.8, 0.6};
    for (int n : {-7, -1, 0, 1, 2, 9}) {
        Cplx viaStd = std::pow(z, static_cast<double>(n));
        CHECK(std::abs(ipow(z, n) - viaStd) <= 1e-13 * std::abs(viaStd));
    }
}

TEST_CASE("quarter powers of q build on the principal sqrt of s") {
    Params p = testParams();
    CHECK(std::abs(p.qq(2) - p.s) < 1e-15);
    CHECK(std::abs(p.qq(4) - p.q()) < 1e-14);
    CHECK(std::abs(p.qq(-4) * p.q() - 1.0) < 1e-14);
    CHECK(std::abs(p.qq(1) * p.qq(1) - p.s) < 1e-14);
    Cplx rho = (p.s + 1.0 / p.s) * (p.s + 1.0 / p.s) / p.c0;
    CHECK(std::abs(p.rho() - rho) < 1e-14);
}

TEST_CASE("parameter validation rejects degenerate inputs") {
    Params p = testParams();
    CHECK_NOTHROW(p.validate());

    Params zeroC = p;
    zeroC.c0 = 0.0;
    CHECK_THROWS_AS(zeroC.validate(), std::invalid_argument);

    Params unit = p;  // s = 1 makes s - 1/s vanish on the deformed branch
    unit.s = 1.0;
    CHECK_THROWS_AS(unit.validate(), std::invalid_argument);
    unit.classical = true;
    CHECK_NOTHROW(unit.validate());

    Params badTol = p;
    badTol.tolId = 0.0;
    CHECK_THROWS_AS(badTol.validate(), std::invalid_argument);
}

TEST_CASE("random draws are seeded and band-limited") {
    Rng a(99), b(99);
    for (int i = 0; i < 10; ++i) CHECK(a.annulus(0.5, 2.0) == b.annulus(0.5, 2.0));

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        double m = std::abs(rng.deformation());
        CHECK(m >= 1.05);
        CHECK(m <= 1.4);
        double sp = std::abs(rng.spectral());
        CHECK(sp >= 0.8);
        CHECK(sp <= 1.6);
        bool inGap = sp > 0.93 && sp < 1.08;
        CHECK_FALSE(inGap);
        int n = rng.integer(1, 2);
        CHECK(n >= 1);
        CHECK(n <= 2);
    }
}

TEST_CASE("complex formatting round-trips through the parser") {
    for (Cplx z : {Cplx{1.2345678901234567, -0.000031}, Cplx{-3.0, 0.0}, Cplx{0.0, 2.5},
                   Cplx{1e-17, 1e17}}) {
        Cplx back = parseCplx(formatCplx(z), "test");
        CHECK(back.real() == z.real());
        CHECK(back.imag() == z.imag());
    }
}

TEST_CASE("complex literals") {
    CHECK(parseCplx("1.5", "k") == Cplx{1.5, 0.0});
    CHECK(parseCplx("-0.3i", "k") == Cplx{0.0, -0.3});
    CHECK(parseCplx("1.2+0.3i", "k") == Cplx{1.2, 0.3});
    CHECK(parseCplx("1.2-0.3i", "k") == Cplx{1.2, -0.3});
    CHECK(parseCplx("2e-3+1e2i", "k") == Cplx{2e-3, 1e2});
    CHECK(parseCplx("-i", "k") == Cplx{0.0, -1.0});
    CHECK_THROWS_AS(parseCplx("", "k"), ConfigError);
    CHECK_THROWS_AS(parseCplx("1.2+", "k"), ConfigError);
    CHECK_THROWS_AS(parseCplx("abc", "k"), ConfigError);
}

TEST_CASE("half-integer spins") {
    CHECK(parseHalfInteger("1/2", "j") == 1);
    CHECK(parseHalfInteger("1", "j") == 2);
    CHECK(parseHalfInteger("3/2", "j") == 3);
    CHECK(parseHalfInteger("5", "j") == 10);
    CHECK_THROWS_AS(parseHalfInteger("7/3", "j"), ConfigError);
    CHECK_THROWS_AS(parseHalfInteger("0", "j"), ConfigError);
    CHECK_THROWS_AS(parseHalfInteger("-1/2", "j"), ConfigError);
    CHECK_THROWS_AS(parseHalfInteger("200", "j"), ConfigError);
}

TEST_CASE("config file parsing") {
    std::string path = "qtri_test_config.cfg";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "s = 1.21+0.05i\n"
            << "\n"
            << "kappa = 0.8-0.1i\n"
            << "j = 3/2\n"
            << "N = 3\n"
            << "seed = 12345\n"
            << "suite = classical,spectral\n";
    }
    RunConfig cfg = parseConfigFile(path);
    CHECK(cfg.params.s == Cplx{1.21, 0.05});
    CHECK(cfg.params.kappa == Cplx{0.8, -0.1});
    CHECK(cfg.twoJ == 3);
    CHECK(cfg.chainLength == 3);
    CHECK(cfg.seed == 12345);
    REQUIRE(cfg.suites.size() == 2);
    CHECK(cfg.suites[0] == "classical");
    CHECK(cfg.suites[1] == "spectral");
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "s = 1.2\nq = 1.44\n";
    }
    CHECK_THROWS_AS(parseConfigFile(path), ConfigError);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "voltage = 11\n";
    }
    CHECK_THROWS_WITH_AS(parseConfigFile(path), doctest::Contains("voltage"), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("configured chains respect the matrix-side cap") {
    RunConfig cfg;
    cfg.twoJ = 4;  // five-dimensional site
    cfg.chainLength = 3;
    CHECK_THROWS_AS(cfg.chain(), ConfigError);
    cfg.chainLength = 2;
    CHECK(cfg.chain().dims() == std::vector<int>{5, 5});
}

TEST_CASE("kronecker products keep the left factor most significant") {
    Operator d({2}, (Matrix(2, 2) << 1, 0, 0, 2).finished());
    Operator id = Operator::identity({2});
    Operator left = kron(d, id);
    // diag(1, 1, 2, 2): the left factor indexes the coarse blocks.
    Vector diag = left.mat.diagonal();
    CHECK(diag(0) == Cplx{1, 0});
    CHECK(diag(1) == Cplx{1, 0});
    CHECK(diag(2) == Cplx{2, 0});
    CHECK(diag(3) == Cplx{2, 0});
    CHECK(left.dims == std::vector<int>{2, 2});

    Operator right = kron(id, d);
    Vector diag2 = right.mat.diagonal();
    CHECK(diag2(0) == Cplx{1, 0});
    CHECK(diag2(1) == Cplx{2, 0});
    CHECK(diag2(2) == Cplx{1, 0});
    CHECK(diag2(3) == Cplx{2, 0});
}

TEST_CASE("tensor embedding acts on the requested site only") {
    Operator d({2}, (Matrix(2, 2) << 3, 0, 0, 7).finished());
    std::vector<int> dims{2, 2, 2};
    Operator mid = tensorEmbed(d, 1, dims);
    CHECK(mid.dims == dims);
    CHECK(relResidual(mid, kron(kron(Operator::identity({2}), d), Operator::identity({2}))) <
          1e-15);
}

TEST_CASE("identity fitting") {
    Operator almost = 3.0 * Operator::identity({4});
    almost.mat(1, 2) = 1e-13;
    IdentityFit fit = fitIdentityMultiple(almost);
    CHECK(std::abs(fit.factor - Cplx{3.0, 0.0}) < 1e-12);
    CHECK(fit.relResidual < 1e-12);

    Operator far = almost;
    far.mat(0, 3) = 0.5;
    CHECK(fitIdentityMultiple(far).relResidual > 1e-2);
}

TEST_CASE("laurent polynomials in the spectral parameter") {
    Operator a({2}, (Matrix(2, 2) << 1, 2, 3, 4).finished());
    Operator b({2}, (Matrix(2, 2) << 0, 1, 1, 0).finished());

    LaurentOperator f({2});
    f.add(1, a);
    f.add(-1, b);
    CHECK(f.minDegree() == -1);
    CHECK(f.maxDegree() == 1);

    Cplx u{1.3, -0.4};
    Operator manual = u * a + (1.0 / u) * b;
    CHECK(relResidual(f.eval(u), manual) < 1e-15);

    LaurentOperator g({2});
    g.add(2, b);
    LaurentOperator prod = f.product(g);
    CHECK(prod.minDegree() == 1);
    CHECK(prod.maxDegree() == 3);
    CHECK(relResidual(prod.eval(u), f.eval(u) * g.eval(u)) < 1e-14);

    // Coefficients that are pure round-off get pruned away.
    LaurentOperator noisy = f;
    noisy.add(5, Operator({2}, Matrix::Constant(2, 2, Cplx{1e-14, 0})));
    noisy.prune(1e-10);
    CHECK(noisy.maxDegree() == 1);

    LaurentOperator empty({2});
    CHECK_THROWS_AS(empty.minDegree(), std::logic_error);
}

TEST_CASE("aux-matrix products match pointwise 2x2 multiplication") {
    Rng rng(11);
    AuxLaurent m({2});
    AuxLaurent n({2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Matrix mi = Matrix::Zero(2, 2), ni = Matrix::Zero(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    mi(r, c) = rng.annulus(0.3, 1.5);
                    ni(r, c) = rng.annulus(0.3, 1.5);
                }
            m.at(i, j).add(1, Operator({2}, mi));
            m.at(i, j).add(-1, Operator({2}, 0.5 * ni));
            n.at(i, j).add(0, Operator({2}, ni));
        }
    AuxLaurent prod = m.product(n);
    Cplx u{0.9, 0.35};
    auto pm = m.eval(u);
    auto pn = n.eval(u);
    auto pp = prod.eval(u);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Operator manual = pm[2 * i] * pn[j] + pm[2 * i + 1] * pn[2 + j];
            CHECK(relResidual(pp[2 * i + j], manual) < 1e-14);
        }
}

TEST_CASE("eigendecomposition is deterministic and residual-certified") {
    Matrix m(3, 3);
    m << Cplx{2, 0}, Cplx{0, 1}, 0, 0, Cplx{1, 0}, Cplx{0.3, 0}, 0, 0, Cplx{-1, 0};
    EigenSystem sys = eigenDecompose(m, 1e-8);
    REQUIRE(sys.values.size() == 3);
    CHECK(sys.values(0).real() == doctest::Approx(-1.0));
    CHECK(sys.values(1).real() == doctest::Approx(1.0));
    CHECK(sys.values(2).real() == doctest::Approx(2.0));
    CHECK(sys.maxResidual < 1e-8);
}

TEST_CASE("polynomial roots via the companion matrix") {
    // (z-1)(z-2)(z-3) = -6 + 11 z - 6 z^2 + z^3
    std::vector<Cplx> coeffs{{-6, 0}, {11, 0}, {-6, 0}, {1, 0}};
    std::vector<Cplx> roots = polyRoots(coeffs, 1e-8);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - Cplx{1, 0}) < 1e-10);
    CHECK(std::abs(roots[1] - Cplx{2, 0}) < 1e-10);
    CHECK(std::abs(roots[2] - Cplx{3, 0}) < 1e-10);

    // A negligible leading coefficient is stripped, not inverted.
    std::vector<Cplx> padded = coeffs;
    padded.push_back(Cplx{1e-16, 0});
    CHECK(polyRoots(padded, 1e-8).size() == 3);

    CHECK_THROWS_AS(polyRoots({Cplx{0, 0}, Cplx{0, 0}}, 1e-8), std::invalid_argument);
}

TEST_CASE("span fitting recovers exact coefficients") {
    Rng rng(21);
    auto randomOp = [&]() {
        Matrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = rng.annulus(0.2, 1.0);
        return Operator({3}, m);
    };
    Operator b0 = randomOp(), b1 = randomOp();
    Cplx c0{1.3, -0.2}, c1{-0.4, 0.9};
    SpanFit fit = fitSpan(c0 * b0 + c1 * b1, {b0, b1});
    CHECK(fit.relResidual < 1e-13);
    CHECK(std::abs(fit.coeffs[0] - c0) < 1e-12);
    CHECK(std::abs(fit.coeffs[1] - c1) < 1e-12);

    SpanFit miss = fitSpan(randomOp(), {b0, b1});
    CHECK(miss.relResidual > 1e-2);
}

TEST_CASE("left-factor fitting recovers a prescribed decomposition") {
    Rng rng(22);
    auto randomOp = [&](int d) {
        Matrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = rng.annulus(0.2, 1.0);
        return Operator({d}, m);
    };
    Operator x0 = randomOp(2), x1 = randomOp(2);
    Operator b1 = randomOp(3);
    Operator target = kron(x0, Operator::identity({3})) + kron(x1, b1);
    FactorFit fit = fitLeftFactors(target, 2, 3, {Operator::identity({3}), b1});
    CHECK(fit.relResidual < 1e-13);
    CHECK(relResidual(fit.left[0], x0) < 1e-12);
    CHECK(relResidual(fit.left[1], x1) < 1e-12);
}

TEST_CASE("multiset distance") {
    std::vector<Cplx> a{{1, 0}, {2, 0}, {3, 1}};
    std::vector<Cplx> b{{3, 1}, {1, 0}, {2, 0}};
    CHECK(multisetDistance(a, b) < 1e-15);
    b[0] += Cplx{0.01, 0};
    CHECK(multisetDistance(a, b) == doctest::Approx(0.01));
}

TEST_CASE("span rank diagnostics") {
    Operator id = Operator::identity({3});
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = 1.0;
    Operator b({3}, m);
    RankInfo info = spanRank({id, 2.0 * id, b}, 1e-6);
    CHECK(info.rank == 2);
    RankInfo one = spanRank({id, Cplx{0.5, 0.1} * id}, 1e-6);
    CHECK(one.rank == 1);
    CHECK(one.leadingGap > 1e6);
}

TEST_CASE("reports serialize deterministically") {
    Report r;
    r.command = "verify";
    r.seed = 3;
    r.checks.push_back(makeCheck("b/second", "rel", 1e-12, 1e-10));
    CheckRecord first = makeCheck("a/first", "rel", 2e-9, 1e-10);
    first.inputs["s"] = "1.2";
    first.fitted["omega"] = "0.5";
    first.note = "expected to fail";
    r.checks.push_back(first);

    CHECK(r.passedCount() == 1);
    CHECK(r.failedCount() == 1);
    CHECK_FALSE(r.allPass());

    std::string json = r.toJson();
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["command"] == "verify");
    CHECK(parsed["passed"] == 1);
    CHECK(parsed["failed"] == 1);
    REQUIRE(parsed["checks"].size() == 2);
    CHECK(parsed["checks"][0]["name"] == "a/first");  // sorted by name
    CHECK(parsed["checks"][0]["pass"] == false);
    CHECK(parsed["checks"][0]["inputs"]["s"] == "1.2");
    CHECK(parsed["checks"][1]["name"] == "b/second");
    CHECK(parsed["checks"][1]["pass"] == true);
    CHECK(r.toJson() == json);
}
