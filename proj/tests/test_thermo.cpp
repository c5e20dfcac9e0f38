#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mbqc/lattice_program.hpp"
#include "mbqc/thermo.hpp"
#include "mbqc/verify.hpp"

using namespace mbqc;
using namespace mbqc::thermo;

namespace {

ProbabilityDistribution uniform(int count) {
    return make_distribution(Eigen::VectorXd::Constant(count, 1.0 / count));
}

}  // namespace

TEST_CASE("landauer heat arithmetic") {
    CHECK(landauer_heat(0.0, 300.0) == 0.0);
    CHECK(landauer_heat(1.0, 300.0) ==
          doctest::Approx(1.380649e-23 * 300.0 * std::numbers::ln2).epsilon(1e-15));
    CHECK(std::abs(landauer_heat(1.0, 300.0) - 2.8710e-21) < 1e-24);

    const auto natural = PhysicalConstants::natural();
    CHECK(landauer_heat(6.0, 1.0, natural) ==
          doctest::Approx(4.1588830833596715).epsilon(1e-15));

    CHECK_THROWS_AS(landauer_heat(-1.0, 300.0), ValidationError);
    CHECK_THROWS_AS(landauer_heat(1.0, 0.0), ValidationError);
}

TEST_CASE("ledger bookkeeping") {
    ThermoLedger ledger(300.0);
    ledger.store("round 1", 2);
    CHECK(ledger.stored_bits() == 2);
    CHECK(ledger.heat_joules() == 0.0);

    ledger.erase("round 1", 2);
    CHECK(ledger.stored_bits() == 0);
    CHECK(ledger.erased_bits_total() == 2);
    CHECK(ledger.heat_joules() == doctest::Approx(landauer_heat(2.0, 300.0)).epsilon(1e-15));

    ledger.erase("noop", 0);
    CHECK(ledger.heat_joules() == doctest::Approx(landauer_heat(2.0, 300.0)).epsilon(1e-15));

    ledger.store("round 2", 2);
    CHECK_THROWS_AS(ledger.erase("too much", 3), ValidationError);
    CHECK(ledger.events().size() == 4);

    // Heat identity: heat / (kT ln2) is exactly the erased-bit count.
    const double per_bit = landauer_heat(1.0, 300.0);
    CHECK(ledger.heat_joules() / per_bit ==
          doctest::Approx(static_cast<double>(ledger.erased_bits_total())).epsilon(1e-12));
}

TEST_CASE("cluster memory policy") {
    SUBCASE("n=2, m=4") {
        const auto program = wire_identity_program(4, 2);
        const auto trace =
            cluster_memory_trace(to_pattern(program), program.layout, 300.0);
        CHECK(trace.stored_after_layer == std::vector<long long>{2, 4, 4});
        CHECK(trace.ledger.erased_bits_total() == 6);
        CHECK(trace.ledger.stored_bits() == 0);
        CHECK(trace.ledger.heat_joules() ==
              doctest::Approx(landauer_heat(6.0, 300.0)).epsilon(1e-14));
    }
    SUBCASE("n=1, m=2") {
        const auto program = wire_identity_program(2, 1);
        const auto trace =
            cluster_memory_trace(to_pattern(program), program.layout, 300.0);
        CHECK(trace.stored_after_layer == std::vector<long long>{1});
        CHECK(trace.ledger.erased_bits_total() == 1);
        CHECK(trace.ledger.heat_joules() ==
              doctest::Approx(landauer_heat(1.0, 300.0)).epsilon(1e-14));
    }
    SUBCASE("steady state is 2 bits per register qubit") {
        for (int rows : {1, 2, 3}) {
            for (int cols : {3, 4, 5}) {
                const auto program = wire_identity_program(cols, rows);
                const auto trace =
                    cluster_memory_trace(to_pattern(program), program.layout, 300.0);
                for (std::size_t t = 1; t < trace.stored_after_layer.size(); ++t) {
                    CHECK(trace.stored_after_layer[t] == 2 * rows);
                }
                CHECK(trace.ledger.erased_bits_total() ==
                      static_cast<long long>(rows) * (cols - 1));
            }
        }
    }
    SUBCASE("the steady-state view keeps the final frame") {
        const auto program = wire_identity_program(4, 2);
        const auto trace = cluster_memory_trace(to_pattern(program), program.layout, 300.0,
                                                PhysicalConstants::si(), false);
        CHECK(trace.ledger.stored_bits() == 4);
        CHECK(trace.ledger.erased_bits_total() == 2);
    }
    SUBCASE("non layer-ordered patterns are rejected") {
        MeasurementPattern p;
        p.layout = ClusterLayout::lattice(1, 3);
        p.steps = {{1, 0.0, {}, {}}, {0, 0.0, {}, {}}};
        p.outputs = {2};
        CHECK_THROWS_AS(cluster_memory_trace(p, p.layout, 300.0), ValidationError);
    }
}

TEST_CASE("partition function") {
    CHECK(partition_function({0.0}, 300.0) == 1.0);
    CHECK(partition_function({0.0, 0.0}, 300.0) == 2.0);

    const double kT = 1.380649e-23 * 300.0;
    CHECK(partition_function({0.0, kT * std::numbers::ln2}, 300.0) ==
          doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(partition_function({0.0}, -1.0), ValidationError);
    CHECK_THROWS_AS(partition_function({}, 300.0), ValidationError);
}

TEST_CASE("sagawa-ueda bound") {
    const auto natural = PhysicalConstants::natural();
    SUBCASE("symmetric memories have vanishing free-energy change") {
        MemoryModel model{{{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}, 1.0};
        Eigen::VectorXd p(3);
        p << 0.2, 0.5, 0.3;
        const auto bound = sagawa_ueda_bound(model, make_distribution(p), natural);
        CHECK(bound.delta_f == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(bound.min_work == doctest::Approx(bound.entropy_nats).epsilon(1e-13));
    }
    SUBCASE("uniform pad keys reproduce the 2n kT ln2 corollary") {
        for (int n : {1, 2}) {
            const int count = 1 << (2 * n);
            MemoryModel model{std::vector<std::vector<double>>(
                                  static_cast<std::size_t>(count), {0.0}),
                              1.0};
            const auto bound = sagawa_ueda_bound(model, uniform(count), natural);
            CHECK(bound.min_work ==
                  doctest::Approx(2.0 * n * std::numbers::ln2).epsilon(1e-13));
        }
    }
    SUBCASE("asymmetric memory shifts the bound by the free energy") {
        // Z_0 = 1, Z_1 = 2: delta F = -kT ln2 / 2, min work = 1.5 kT ln2.
        MemoryModel model{{{0.0}, {0.0, 0.0}}, 1.0};
        const auto bound = sagawa_ueda_bound(model, uniform(2), natural);
        CHECK(bound.delta_f == doctest::Approx(-0.5 * std::numbers::ln2).epsilon(1e-13));
        CHECK(bound.min_work == doctest::Approx(1.5 * std::numbers::ln2).epsilon(1e-13));
    }
    SUBCASE("size mismatch") {
        MemoryModel model{{{0.0}}, 1.0};
        CHECK_THROWS_AS(sagawa_ueda_bound(model, uniform(2), natural), ValidationError);
    }
}

TEST_CASE("uniform distributions maximize the symmetric-memory bound") {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    const auto natural = PhysicalConstants::natural();
    for (int trial = 0; trial < 20; ++trial) {
        const int count = 2 + static_cast<int>(rng() % 7);
        Eigen::VectorXd p(count);
        for (int j = 0; j < count; ++j) p(j) = unit(rng);
        p /= p.sum();
        MemoryModel model{std::vector<std::vector<double>>(
                              static_cast<std::size_t>(count), {0.0, 0.5}),
                          1.0};
        const auto random_bound = sagawa_ueda_bound(model, make_distribution(p), natural);
        const auto uniform_bound = sagawa_ueda_bound(model, uniform(count), natural);
        CHECK(random_bound.min_work <= uniform_bound.min_work + 1e-12);
    }
}

TEST_CASE("heat report on the 1x3 wire") {
    const auto pattern = builtin_pattern("wire_identity", {3});
    const auto ensemble = enumerate_trajectories(build_cluster(pattern.layout), pattern);
    const auto report = mbqc_heat_report(ensemble, pattern.layout, 300.0);
    CHECK(report.entropy_bits == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.eq3_floor_bits == 2.0);
    CHECK(report.erased_bits == 2);
    CHECK(report.cluster_policy_heat ==
          doctest::Approx(landauer_heat(2.0, 300.0)).epsilon(1e-13));
    CHECK(report.landauer_floor_heat ==
          doctest::Approx(report.cluster_policy_heat).epsilon(1e-9));
    CHECK(report.meets_eq3_floor);
    CHECK(report.pass);
    CHECK(report.per_register_qubit_bits == doctest::Approx(2.0));
}

TEST_CASE("heat report on the 2x3 cluster in natural units") {
    LatticeProgram program;
    program.layout = ClusterLayout::lattice(2, 3);
    program.measured_cols = 2;
    program.column_angles = {{0.0, 0.0}, {0.0, 0.0}};
    const auto pattern = to_pattern(program);
    const auto ensemble = enumerate_trajectories(build_cluster(program.layout), pattern);
    const auto report =
        mbqc_heat_report(ensemble, program.layout, 1.0, PhysicalConstants::natural());
    CHECK(report.entropy_bits == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(report.eq3_floor_bits == 4.0);
    CHECK(report.erased_bits == 4);
    CHECK(report.cluster_policy_heat ==
          doctest::Approx(4.0 * std::numbers::ln2).epsilon(1e-13));
    CHECK(report.pass);
    CHECK(report.meets_eq3_floor);
}

TEST_CASE("eq3 chaining: a passing pad implies the floor is covered") {
    for (int rows : {1, 2}) {
        const auto pattern = builtin_pattern("wire_identity", {3}, rows);
        const auto keys = verify::otp_from_mbqc(pattern.layout, pattern);
        const auto otp = verify::check_one_time_pad(keys, 8, 3);
        const auto ensemble = enumerate_trajectories(build_cluster(pattern.layout), pattern);
        const auto heat = mbqc_heat_report(ensemble, pattern.layout, 300.0);
        if (otp.encryption_pass) {
            CHECK(heat.entropy_bits >= heat.eq3_floor_bits - 1e-9);
            CHECK(heat.meets_eq3_floor);
        }
    }
}
