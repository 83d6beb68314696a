#include <cstdio>
#include <iostream>

#include <gtest/gtest.h>

#include "liecensus/verify.hpp"

using namespace liecensus;

namespace {

OracleCache& cache()
{
    static OracleCache c;
    return c;
}

void report(const CriterionResult& r)
{
    std::cout << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    for (const auto& c : r.checks)
        if (!c.pass)
            std::cout << "    failed: " << c.what << "\n";
    std::cout.flush();
    for (const auto& c : r.checks)
        EXPECT_TRUE(c.pass) << c.what;
}

} // namespace

TEST(Acceptance, ClassCounts) { report(criterion_class_counts(cache())); }
TEST(Acceptance, SemisimpleCensus) { report(criterion_semisimple(cache())); }
TEST(Acceptance, FixedClassBridge) { report(criterion_fixed_classes(cache())); }
TEST(Acceptance, SymbolicIdentities) { report(criterion_symbolic()); }
TEST(Acceptance, RestrictionStatistics) { report(criterion_restriction(cache())); }
TEST(Acceptance, FlagChain) { report(criterion_flags(cache())); }
TEST(Acceptance, RatioTrend) { report(criterion_ratio_trend()); }
TEST(Acceptance, LabelBijection) { report(criterion_label_bijection(cache())); }

int main(int argc, char** argv)
{
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
