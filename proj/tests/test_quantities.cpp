#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sbs/quantities.hpp"

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST(PockelsToGamma, Examples)
{
    EXPECT_EQ(sbs::pockels_to_gamma(0.0, 2.2), 0.0);
    // 0.2 * 2.2^4 = 4.685...
    EXPECT_NEAR(sbs::pockels_to_gamma(0.2, 2.2), 4.685, 1e-3);
    // AlN: 0.02 * 2.12^4
    EXPECT_NEAR(sbs::pockels_to_gamma(0.02, 2.12), 0.404, 1e-3);
}

TEST(PockelsToGamma, RejectsBadInput)
{
    EXPECT_THROW(sbs::pockels_to_gamma(0.1, 0.9), sbs::ValidationError);
    EXPECT_THROW(sbs::pockels_to_gamma(std::nan(""), 2.0), sbs::ValidationError);
    EXPECT_THROW(sbs::pockels_to_gamma(0.1, std::numeric_limits<double>::infinity()),
                 sbs::ValidationError);
}

TEST(PockelsToGamma, MonotoneInBothArguments)
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        const double p = oracle::uniform(rng, 0.001, 0.5);
        const double n = oracle::uniform(rng, 1.0, 4.0);
        const double dp = oracle::uniform(rng, 1e-6, 0.1);
        const double dn = oracle::uniform(rng, 1e-6, 0.5);
        EXPECT_LT(sbs::pockels_to_gamma(p, n), sbs::pockels_to_gamma(p + dp, n));
        EXPECT_LT(sbs::pockels_to_gamma(p, n), sbs::pockels_to_gamma(p, n + dn));
    }
}

TEST(Material, GammaRoundTripIsExact)
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const double p = oracle::uniform(rng, 0.0, 0.3);
        const double n = oracle::uniform(rng, 1.0, 3.5);
        const auto m = sbs::make_material("x", n, p, 4.0, 3e5);
        EXPECT_EQ(m.gamma, sbs::pockels_to_gamma(p, n));
        EXPECT_EQ(m.epsilon, n * n);
    }
}

TEST(Material, EpsilonOverride)
{
    const auto m = sbs::make_material("x", 2.0, 0.1, 4.0, 3e5, 5.5);
    EXPECT_EQ(m.epsilon, 5.5);
    EXPECT_THROW(sbs::make_material("x", 2.0, 0.1, 4.0, 3e5, 0.5), sbs::ValidationError);
}

TEST(Material, InvariantsRejectNonPhysical)
{
    EXPECT_THROW(sbs::make_material("x", 2.0, 0.1, 0.0, 3e5), sbs::ValidationError);
    EXPECT_THROW(sbs::make_material("x", 2.0, 0.1, 4.0, -1.0), sbs::ValidationError);
    EXPECT_THROW(sbs::make_material("x", 0.5, 0.1, 4.0, 3e5), sbs::ValidationError);
}

TEST(MaterialLookup, LithiumNiobate)
{
    const auto m = sbs::material_lookup("LiNbO3");
    EXPECT_NEAR(m.p, 0.2, 0.01);
    EXPECT_NEAR(m.n, 2.2, 0.05);
    EXPECT_NEAR(m.rho, 4.64, 0.05);
    EXPECT_NEAR(m.s, 3.5e5, 0.05e5);
    EXPECT_GE(m.gamma, 0.3);
    EXPECT_LE(m.gamma, 20.0);
    EXPECT_FALSE(m.source.empty());
}

TEST(MaterialLookup, AluminumNitride)
{
    EXPECT_EQ(sbs::material_lookup("AlN").p, 0.02);
}

TEST(MaterialLookup, UnknownNameFails)
{
    EXPECT_THROW(sbs::material_lookup("unobtainium"), sbs::ValidationError);
}

TEST(MaterialLookup, BundledSetCoversStatedRange)
{
    const auto& mats = sbs::bundled_materials();
    ASSERT_GE(mats.size(), 3u);
    double pmin = 1.0, pmax = 0.0;
    for (const auto& m : mats) {
        EXPECT_NO_THROW(sbs::validate(m)) << m.name;
        EXPECT_EQ(m.gamma, sbs::pockels_to_gamma(m.p, m.n)) << m.name;
        EXPECT_GE(m.gamma, sbs::kBundledGammaMin) << m.name;
        EXPECT_LE(m.gamma, sbs::kBundledGammaMax) << m.name;
        pmin = std::min(pmin, m.p);
        pmax = std::max(pmax, m.p);
    }
    EXPECT_EQ(pmin, 0.02);
    EXPECT_GT(pmax, 0.16);
    EXPECT_NO_THROW(sbs::material_lookup("GaAs"));
}

TEST(MaterialLookup, LoadsUserFile)
{
    const auto path = write_temp("sbs_one_material.json", R"({"materials": [
        {"name": "Glass", "n": 1.45, "p": 0.27, "gamma": null, "epsilon": null,
         "rho": 2.2, "s": 5.9e5, "source": "test"}]})");
    const auto m = sbs::material_lookup(path.string());
    EXPECT_EQ(m.name, "Glass");
    EXPECT_EQ(m.gamma, sbs::pockels_to_gamma(0.27, 1.45));
    EXPECT_EQ(m.source, "test");
}

TEST(MaterialLookup, SelectsRecordFromMultiRecordFile)
{
    const auto path = write_temp("sbs_two_materials.json", R"({"materials": [
        {"name": "A", "n": 1.5, "p": 0.1, "rho": 2.0, "s": 4e5, "source": ""},
        {"name": "B", "n": 2.0, "p": 0.1, "gamma": 3.0, "rho": 3.0, "s": 5e5, "source": ""}]})");
    EXPECT_THROW(sbs::material_lookup(path.string()), sbs::ValidationError);
    const auto b = sbs::material_lookup(path.string() + ":B");
    EXPECT_EQ(b.gamma, 3.0); // explicit override
    EXPECT_THROW(sbs::material_lookup(path.string() + ":C"), sbs::ValidationError);
}

TEST(MaterialLookup, MalformedFileFails)
{
    const auto broken = write_temp("sbs_broken.json", "{\"materials\": [ {\"name\": ");
    EXPECT_THROW(sbs::material_lookup(broken.string()), sbs::ValidationError);
    const auto missing = write_temp("sbs_missing_field.json",
                                    R"({"materials": [{"name": "X", "n": 2.0, "p": 0.1, "s": 1e5}]})");
    EXPECT_THROW(sbs::material_lookup(missing.string()), sbs::ValidationError);
}

TEST(QToRate, Examples)
{
    EXPECT_DOUBLE_EQ(sbs::q_to_rate(1.215e15, 1e5), 1.215e10);
    EXPECT_EQ(sbs::q_to_rate(7.3, 1.0), 7.3);
    EXPECT_DOUBLE_EQ(sbs::q_to_rate(6.2e10, 1e4), 6.2e6);
    EXPECT_EQ(sbs::q_to_rate(6.2e10, std::numeric_limits<double>::infinity()), 0.0);
}

TEST(QToRate, RejectsNonPositive)
{
    EXPECT_THROW(sbs::q_to_rate(0.0, 1e4), sbs::ValidationError);
    EXPECT_THROW(sbs::q_to_rate(1e10, 0.0), sbs::ValidationError);
    EXPECT_THROW(sbs::q_to_rate(-1e10, 1e4), sbs::ValidationError);
}

TEST(RateSet, RecordsOrigin)
{
    const auto r = sbs::rate_from_q(6.2e10, 1e4);
    EXPECT_EQ(r.origin, sbs::RateOrigin::from_q_factor);
    EXPECT_DOUBLE_EQ(r.value, 6.2e6);
    EXPECT_EQ(sbs::direct_rate(3.0).origin, sbs::RateOrigin::direct);
    EXPECT_THROW(sbs::direct_rate(-1.0), sbs::ValidationError);
}
