#include <doctest.h>

#include <cmath>
#include <vector>

#include "textclass/linear.hpp"
#include "textclass/rng.hpp"
#include "textclass/types.hpp"

using namespace textclass;

namespace {

Matrix random_matrix(Index rows, Index cols, SplitMix64& rng, double lo, double hi) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = lo + (hi - lo) * rng.next_unit();
    return m;
}

// Two point clouds split by the second feature axis.
const Matrix kToyX = [] {
    Matrix X(4, 2);
    X << 1.0, 0.0,
         2.0, 0.2,
         0.1, 1.0,
         0.0, 2.0;
    return X;
}();
const std::vector<int> kToyY = {0, 0, 1, 1};
const std::vector<std::string> kToyClasses = {"left", "right"};

} // namespace

TEST_SUITE("linear") {

TEST_CASE("softmax closed forms") {
    Vector d(1);
    d << 1.0;
    CHECK(softmax_probabilities(Matrix::Zero(3, 1), d)
              .isApprox(Vector::Constant(3, 1.0 / 3.0), 1e-14));

    Matrix theta(2, 1);
    theta << 1.0, 0.0; // logits (1, 0)
    Vector p = softmax_probabilities(theta, d);
    const double e = std::exp(1.0);
    CHECK(p[0] == doctest::Approx(e / (1.0 + e)).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(1.0 / (1.0 + e)).epsilon(1e-14));

    Matrix shifted = theta.array() + 100.0; // both logits +100
    CHECK(softmax_probabilities(shifted, d).isApprox(p, 1e-12));

    CHECK_THROWS_WITH_AS(softmax_probabilities(theta, Vector::Zero(3)),
                         doctest::Contains("dimension mismatch"), Error);
}

TEST_CASE("softmax outputs are a probability vector") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Index k = 2 + static_cast<Index>(rng.next_below(5));
        Index n = 1 + static_cast<Index>(rng.next_below(6));
        Matrix theta = random_matrix(k, n + 1, rng, -30.0, 30.0);
        Vector d(n + 1);
        d[0] = 1.0;
        for (Index j = 1; j <= n; ++j) d[j] = rng.next_unit();
        Vector p = softmax_probabilities(theta, d);
        CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
        for (Index j = 0; j < k; ++j) {
            // closed interval: a logit gap beyond ~36 legitimately rounds
            // the winner to 1.0 and may underflow the rest toward 0.0
            CHECK(p[j] >= 0.0);
            CHECK(p[j] <= 1.0);
        }
    }
}

TEST_CASE("cost closed forms") {
    // one document, two classes, zero weights: -log(1/2)
    Matrix X1 = augmented(Matrix(Matrix::Zero(1, 2)));
    CHECK(cross_entropy_cost(Matrix::Zero(2, 3), X1, {0}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    Matrix X3 = augmented(Matrix(Matrix::Ones(3, 2)));
    CHECK(cross_entropy_cost(Matrix::Zero(5, 3), X3, {0, 2, 4}) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-14));

    // near-one-hot prediction drives the cost to ~0; gradient follows
    Matrix confident(2, 3);
    confident << 100.0, 0.0, 0.0,
                 0.0, 0.0, 0.0;
    Matrix Xa = augmented(Matrix(Matrix::Zero(1, 2)));
    double c = cross_entropy_cost(confident, Xa, {0});
    CHECK(c >= 0.0);
    CHECK(c < 1e-12);
    CHECK(cross_entropy_gradient(confident, Xa, {0}).norm() < 1e-12);

    CHECK_THROWS_WITH_AS(cross_entropy_cost(Matrix::Zero(2, 3), Matrix(0, 3), {}),
                         doctest::Contains("empty training data"), Error);
    CHECK_THROWS_WITH_AS(cross_entropy_cost(Matrix::Zero(2, 3), X1, {2}),
                         doctest::Contains("out of range"), Error);
}

TEST_CASE("cost is non-negative on random instances") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix X = augmented(random_matrix(4, 3, rng, 0.0, 1.0));
        Matrix theta = random_matrix(3, 4, rng, -2.0, 2.0);
        std::vector<int> y;
        for (int i = 0; i < 4; ++i) y.push_back(static_cast<int>(rng.next_below(3)));
        CHECK(cross_entropy_cost(theta, X, y) >= 0.0);
    }
}

TEST_CASE("gradient matches central finite differences") {
    SplitMix64 rng(13);
    const double h = 1e-6;
    for (int trial = 0; trial < 20; ++trial) {
        Matrix X = augmented(random_matrix(5, 4, rng, 0.0, 1.0));
        Matrix theta = random_matrix(3, 5, rng, -1.0, 1.0);
        std::vector<int> y = {0, 1, 2,
                              static_cast<int>(rng.next_below(3)),
                              static_cast<int>(rng.next_below(3))};
        Matrix grad = cross_entropy_gradient(theta, X, y);
        for (Index r = 0; r < theta.rows(); ++r)
            for (Index c = 0; c < theta.cols(); ++c) {
                Matrix tp = theta, tm = theta;
                tp(r, c) += h;
                tm(r, c) -= h;
                double fd = (cross_entropy_cost(tp, X, y) - cross_entropy_cost(tm, X, y)) /
                            (2.0 * h);
                double g = grad(r, c);
                double rel = std::abs(g - fd) / std::max({1.0, std::abs(g), std::abs(fd)});
                CHECK(rel < 1e-6);
            }
    }
}

TEST_CASE("gradient class-rows sum to the zero vector") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix X = augmented(random_matrix(6, 3, rng, 0.0, 1.0));
        Matrix theta = random_matrix(4, 4, rng, -2.0, 2.0);
        std::vector<int> y;
        for (int i = 0; i < 6; ++i) y.push_back(static_cast<int>(rng.next_below(4)));
        Matrix grad = cross_entropy_gradient(theta, X, y);
        CHECK(grad.colwise().sum().norm() <= 1e-12);
    }

    // identical documents, balanced labels, zero weights: exactly stationary
    Matrix X = augmented(Matrix(Matrix::Ones(4, 2)));
    Matrix grad = cross_entropy_gradient(Matrix::Zero(2, 3), X, {0, 1, 0, 1});
    CHECK(grad.isZero(1e-15));
}

TEST_CASE("batch training separates the toy set") {
    GdConfig cfg;
    cfg.alpha = 0.5;
    cfg.epochs = 500;
    LinearModel m = train_logistic(kToyX, kToyY, kToyClasses, "s", cfg);
    CHECK(m.classes == kToyClasses);
    for (std::size_t i = 0; i < kToyY.size(); ++i)
        CHECK(apply_linear(m, Vector(kToyX.row(static_cast<Index>(i)).transpose())).class_index ==
              kToyY[i]);
}

TEST_CASE("step halving tames an absurd learning rate") {
    GdConfig cfg;
    cfg.alpha = 1e6;
    cfg.epochs = 50;
    LinearModel m = train_logistic(kToyX, kToyY, kToyClasses, "s", cfg);
    double final_cost = cross_entropy_cost(m.weights, augmented(kToyX), kToyY);
    CHECK(final_cost <= std::log(2.0) + 1e-12); // never worse than the zero start
    CHECK(m.weights.allFinite());
}

TEST_CASE("trainer configuration validation") {
    GdConfig bad;
    bad.epochs = 0;
    CHECK_THROWS_WITH_AS(train_logistic(kToyX, kToyY, kToyClasses, "s", bad),
                         doctest::Contains("epochs must be >= 1"), Error);
    CHECK_THROWS_WITH_AS(train_sgd(kToyX, kToyY, kToyClasses, "s", bad),
                         doctest::Contains("epochs must be >= 1"), Error);
    GdConfig neg;
    neg.alpha = 0.0;
    CHECK_THROWS_WITH_AS(train_logistic(kToyX, kToyY, kToyClasses, "s", neg),
                         doctest::Contains("alpha must be > 0"), Error);
    GdConfig horizon;
    horizon.decay_horizon = 0.0;
    CHECK_THROWS_WITH_AS(train_sgd(kToyX, kToyY, kToyClasses, "s", horizon),
                         doctest::Contains("decay horizon"), Error);
    CHECK_THROWS_WITH_AS(train_logistic(kToyX, {0, 0, 1}, kToyClasses, "s", GdConfig{}),
                         doctest::Contains("size mismatch"), Error);
}

TEST_CASE("per-example update worked by hand") {
    Matrix X_aug(1, 1);
    X_aug << 1.0;
    Vector targets(1);
    targets << 0.0;
    Vector theta(1);
    theta << 1.0;
    Vector out = sgd_epoch(theta, X_aug, targets, 0.5, 99);
    CHECK(out[0] == 0.5); // 1 - 0.5*(1-0)*1

    // zero rate: no movement
    SplitMix64 rng(5);
    Matrix X2 = augmented(random_matrix(3, 2, rng, 0.0, 1.0));
    Vector t2(3);
    t2 << 1, 0, 1;
    Vector th2(3);
    th2 << 0.3, -0.2, 0.8;
    CHECK(sgd_epoch(th2, X2, t2, 0.0, 1).isApprox(th2, 0.0));
}

TEST_CASE("per-example update leaves an exact fit untouched") {
    Matrix X_aug(2, 2);
    X_aug << 1.0, 0.0,
             1.0, 1.0;
    Vector targets(2);
    targets << 1.0, 2.0; // theta=[1,1] reproduces both
    Vector theta(2);
    theta << 1.0, 1.0;
    for (std::uint64_t seed : {1ull, 2ull, 3ull})
        CHECK(sgd_epoch(theta, X_aug, targets, 0.7, seed).isApprox(theta, 0.0));
}

TEST_CASE("per-example epoch is a pure function of its inputs") {
    SplitMix64 rng(15);
    Matrix X_aug = augmented(random_matrix(8, 3, rng, 0.0, 1.0));
    Vector targets(8);
    for (Index i = 0; i < 8; ++i) targets[i] = static_cast<double>(rng.next_below(2));
    Vector theta = Vector::Zero(4);

    Vector a = sgd_epoch(theta, X_aug, targets, 0.3, 42);
    Vector b = sgd_epoch(theta, X_aug, targets, 0.3, 42);
    CHECK(a.isApprox(b, 0.0)); // bitwise repeatable
    Vector c = sgd_epoch(theta, X_aug, targets, 0.3, 43);
    CHECK_FALSE(c.isApprox(a, 0.0)); // visit order is part of the result
}

TEST_CASE("one-vs-rest training separates two classes") {
    Matrix X(6, 2);
    X << 1.0, 0.0,
         0.9, 0.1,
         1.1, 0.0,
         0.0, 1.0,
         0.1, 0.9,
         0.0, 1.1;
    std::vector<int> y = {0, 0, 0, 1, 1, 1};
    LinearModel m = train_sgd(X, y, kToyClasses, "s", GdConfig{}); // alpha .1, 200 epochs
    for (Index i = 0; i < X.rows(); ++i)
        CHECK(apply_linear(m, Vector(X.row(i).transpose())).class_index ==
              y[static_cast<std::size_t>(i)]);
}

TEST_CASE("prediction ties and shared shifts") {
    LinearModel m;
    m.classes = {"a", "b", "c"};
    m.weights = Matrix::Ones(3, 3); // identical weight rows: everything ties
    m.space_ref = "s";
    SplitMix64 rng(16);
    Vector x(2);
    x << rng.next_unit(), rng.next_unit();
    CHECK(apply_linear(m, x).class_index == 0);

    // prediction only sees pairwise weight differences
    LinearModel trained = train_logistic(kToyX, kToyY, kToyClasses, "s", GdConfig{});
    LinearModel shifted = trained;
    Eigen::RowVectorXd r(3);
    r << 5.0, -2.0, 0.75;
    for (Index c = 0; c < shifted.weights.rows(); ++c) shifted.weights.row(c) += r;
    for (int trial = 0; trial < 20; ++trial) {
        Vector q(2);
        q << 3.0 * rng.next_unit() - 1.0, 3.0 * rng.next_unit() - 1.0;
        CHECK(apply_linear(shifted, q).class_index == apply_linear(trained, q).class_index);
    }

    CHECK_THROWS_WITH_AS(apply_linear(trained, Vector::Zero(5)),
                         doctest::Contains("dimension mismatch"), Error);
}

} // TEST_SUITE
