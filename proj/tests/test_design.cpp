#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "sbs/design.hpp"
#include "sbs/io.hpp"

namespace {

sbs::DesignInputs desk_case(const std::string& material = "LiNbO3")
{
    sbs::DesignInputs in;
    in.material = sbs::material_lookup(material);
    return in;
}

int rank(sbs::Verdict v)
{
    return v == sbs::Verdict::feasible ? 2 : (v == sbs::Verdict::marginal ? 1 : 0);
}

} // namespace

TEST(MinPumpPhotons, Examples)
{
    EXPECT_DOUBLE_EQ(sbs::min_pump_photons(1.2e10, 6.2e6, 2.2e6), 1.2e10 * 6.2e6 / (2.2e6 * 2.2e6));
    EXPECT_DOUBLE_EQ(sbs::min_pump_photons(4.0, 9.0, 2.0), 9.0);
    EXPECT_EQ(sbs::min_pump_photons(0.0, 9.0, 2.0), 0.0);
    EXPECT_THROW(sbs::min_pump_photons(1.0, 1.0, 0.0), sbs::ValidationError);
}

TEST(DissipatedPowerDensity, Examples)
{
    EXPECT_EQ(sbs::dissipated_power_density(0.0, 1.2e15, 1.2e9), 0.0);
    EXPECT_EQ(sbs::dissipated_power_density(1e4, 1.2e15, 0.0), 0.0);
    // hbar * 1.2e15 * 1.2e9 * 1e4 = 15.186 erg/s = 1.5186 uW
    EXPECT_NEAR(sbs::dissipated_power_density(1e4, 1.2e15, 1.2e9), 1.5185834, 1e-6);
    EXPECT_THROW(sbs::dissipated_power_density(-1.0, 1.0, 1.0), sbs::ValidationError);
}

TEST(FeasibilityReport, DeskCaseIsFeasible)
{
    const auto rep = sbs::feasibility_report(desk_case());
    EXPECT_EQ(rep.verdict, sbs::Verdict::feasible);
    EXPECT_TRUE(rep.sideband_resolved);
    EXPECT_GE(rep.pump_power_estimate, 1.0);
    EXPECT_LE(rep.pump_power_estimate, 100.0);
    EXPECT_NEAR(rep.g0, 2.2e6, 0.3e6);
    EXPECT_GT(rep.np_density, 1e3);
    EXPECT_LT(rep.np_density, 1e5);
    EXPECT_GT(rep.dissipated_power_density, 1.0 / 3.0);
    EXPECT_LT(rep.dissipated_power_density, 3.0);
    EXPECT_DOUBLE_EQ(rep.margin_optical, 0.1);
    EXPECT_DOUBLE_EQ(rep.margin_acoustic, 0.1);
    EXPECT_TRUE(rep.flags.optical_unitarity);
    EXPECT_TRUE(rep.flags.acoustic_unitarity);
    EXPECT_TRUE(rep.flags.pump_within_budget);
}

TEST(FeasibilityReport, WeakPhotoelasticMaterialNeedsFarMorePump)
{
    const auto strong = sbs::feasibility_report(desk_case("LiNbO3"));
    const auto weak = sbs::feasibility_report(desk_case("AlN"));
    const double ratio = weak.pump_power_estimate / strong.pump_power_estimate;
    EXPECT_GE(ratio, 1e2);
    EXPECT_LE(ratio, 1e3);
}

TEST(FeasibilityReport, IntrinsicLossEqualToExternalIsInfeasible)
{
    auto in = desk_case();
    in.q_opt_int = in.q_opt;
    const auto rep = sbs::feasibility_report(in);
    EXPECT_EQ(rep.verdict, sbs::Verdict::infeasible);
    EXPECT_FALSE(rep.flags.optical_unitarity);
}

TEST(FeasibilityReport, PoorMarginIsMarginal)
{
    auto in = desk_case();
    in.q_ac_int = 2.0 * in.q_ac;
    EXPECT_EQ(sbs::feasibility_report(in).verdict, sbs::Verdict::marginal);
}

TEST(FeasibilityReport, UnresolvedSidebandsAreInfeasible)
{
    auto in = desk_case();
    in.q_opt = 1e3;
    in.q_opt_int = 1e4;
    const auto rep = sbs::feasibility_report(in);
    EXPECT_FALSE(rep.sideband_resolved);
    EXPECT_EQ(rep.verdict, sbs::Verdict::infeasible);
}

TEST(FeasibilityReport, LosslessInternalModesDissipateNothing)
{
    auto in = desk_case();
    in.q_opt_int = std::numeric_limits<double>::infinity();
    in.q_ac_int = std::numeric_limits<double>::infinity();
    const auto rep = sbs::feasibility_report(in);
    EXPECT_EQ(rep.dissipated_power_density, 0.0);
    EXPECT_EQ(rep.margin_optical, 0.0);
    EXPECT_EQ(rep.verdict, sbs::Verdict::feasible);
}

TEST(FeasibilityReport, PumpScalesAsInverseGammaSquared)
{
    const auto base = desk_case();
    auto doubled = base;
    doubled.material = sbs::make_material("x2", base.material.n, 2.0 * base.material.p,
                                          base.material.rho, base.material.s);
    const auto a = sbs::feasibility_report(base);
    const auto b = sbs::feasibility_report(doubled);
    EXPECT_NEAR(a.np_min / b.np_min, 4.0, 1e-12);
    EXPECT_NEAR(a.pump_power_estimate / b.pump_power_estimate, 4.0, 1e-12);
}

TEST(FeasibilityReport, NeverWorsensWithBetterMaterialOrLowerLoss)
{
    auto prev = sbs::feasibility_report(desk_case());
    for (double f : {1.5, 2.0, 3.0, 5.0, 10.0}) {
        auto in = desk_case();
        in.q_opt_int *= f;
        in.q_ac_int *= f;
        const auto rep = sbs::feasibility_report(in);
        EXPECT_LE(rep.pump_power_estimate, prev.pump_power_estimate);
        EXPECT_GE(rank(rep.verdict), rank(prev.verdict));
        prev = rep;
    }

    auto weak = desk_case("AlN");
    weak.pump_budget_uw = 50.0;
    auto last = sbs::feasibility_report(weak);
    for (double p : {0.03, 0.05, 0.1, 0.2, 0.4}) {
        auto in = weak;
        in.material = sbs::make_material("scan", weak.material.n, p, weak.material.rho,
                                         weak.material.s);
        const auto rep = sbs::feasibility_report(in);
        EXPECT_LT(rep.pump_power_estimate, last.pump_power_estimate);
        EXPECT_GE(rank(rep.verdict), rank(last.verdict));
        last = rep;
    }
}

TEST(FeasibilityReport, JsonIsDeterministic)
{
    const auto a = sbs::io::to_json(sbs::feasibility_report(desk_case())).dump(2);
    const auto b = sbs::io::to_json(sbs::feasibility_report(desk_case())).dump(2);
    EXPECT_EQ(a, b);
    const auto j = sbs::io::to_json(sbs::feasibility_report(desk_case()));
    EXPECT_EQ(j.at("verdict"), "feasible");
    EXPECT_EQ(j.at("unitarity_margins").size(), 2u);
    EXPECT_TRUE(j.at("flags").at("pump_within_budget").get<bool>());
}

TEST(FeasibilityReport, RejectsBadInputs)
{
    auto in = desk_case();
    in.volume_um3 = 0.0;
    EXPECT_THROW(sbs::feasibility_report(in), sbs::ValidationError);
    in = desk_case();
    in.q_opt = -1.0;
    EXPECT_THROW(sbs::feasibility_report(in), sbs::ValidationError);
    in = desk_case();
    in.recycling = 0.0;
    EXPECT_THROW(sbs::feasibility_report(in), sbs::ValidationError);
}
