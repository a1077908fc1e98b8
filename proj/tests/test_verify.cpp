#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "rlag/format.hpp"
#include "rlag/verify.hpp"

using namespace rlag;
using namespace rlag::verify;

namespace {

void expect_well_formed(const CheckReport& r)
{
  EXPECT_EQ(r.passed, !r.witness.has_value()) << to_text(r);
}

} // namespace

TEST(Verify, EgfUni)
{
  EXPECT_TRUE(check_egf_uni(0, 1).passed);
  EXPECT_TRUE(check_egf_uni(0, 12).passed);
  EXPECT_TRUE(check_egf_uni(3, 10).passed);
  const auto bad = check_egf_uni(0, 4, Mutation::flip_sign);
  ASSERT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->index, std::vector<long>{1});
  EXPECT_EQ(bad.witness->lhs, "1 + x");
  EXPECT_EQ(bad.witness->rhs, "1 - x");
}

TEST(Verify, EgfBivReportsPairing)
{
  const auto r = check_egf_biv(8);
  EXPECT_TRUE(r.passed);
  EXPECT_NE(r.note.find("s<->x, t<->y e^{(-sx-ty)/(1-s-t)}: matches"), std::string::npos);
  EXPECT_NE(r.note.find("differs first at s^0 t^1"), std::string::npos);
  EXPECT_TRUE(check_egf_biv(2).passed);
}

TEST(Verify, Orthogonality)
{
  EXPECT_TRUE(check_orthogonality(0, 0, 0).passed);
  EXPECT_TRUE(check_orthogonality(0, 1, 0).passed);
  EXPECT_TRUE(check_orthogonality(2, 2, 2).passed);
  const auto bad = check_orthogonality(1, 1, 0, Mutation::flip_sign);
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  expect_well_formed(bad);
}

TEST(Verify, Theorem2)
{
  for (auto which : {Theorem2Identity::sum, Theorem2Identity::alternating, Theorem2Identity::reflected,
                     Theorem2Identity::reciprocal}) {
    EXPECT_TRUE(check_theorem2(1, which).passed) << to_string(which);
    EXPECT_TRUE(check_theorem2(6, which).passed) << to_string(which);
    EXPECT_EQ(theorem2_identity_from_string(to_string(which)), which);
  }
  EXPECT_THROW(check_theorem2(0, Theorem2Identity::sum), std::invalid_argument);
  EXPECT_FALSE(theorem2_identity_from_string("nope").has_value());
}

TEST(Verify, Theorem1AndFtraChain)
{
  EXPECT_TRUE(check_theorem1(2, 2).passed);
  EXPECT_TRUE(check_theorem1(0, 4).passed);
  EXPECT_TRUE(check_theorem1(5, 5).passed);
  EXPECT_TRUE(check_ftra_chain(1, 1).passed);
  EXPECT_TRUE(check_ftra_chain(0, 5).passed);
  EXPECT_TRUE(check_ftra_chain(2, 5).passed);
  EXPECT_FALSE(check_ftra_chain(1, 3, Mutation::flip_sign).passed);
}

TEST(Verify, RoutesAndTable1)
{
  EXPECT_TRUE(check_uni_routes(4, 3).passed);
  EXPECT_TRUE(check_biv_routes(3).passed);
  EXPECT_TRUE(check_table1().passed);
  for (const auto& r : {check_uni_routes(4, 3, Mutation::flip_sign), check_biv_routes(3, Mutation::flip_sign),
                        check_table1(Mutation::flip_sign)}) {
    EXPECT_FALSE(r.passed);
    expect_well_formed(r);
  }
}

TEST(Verify, RunAllDefaultPasses)
{
  const auto reports = run_all(HarnessConfig{});
  EXPECT_TRUE(all_passed(reports));
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports)
    expect_well_formed(r);
}

TEST(Verify, RunAllMutationFailsWithWitnesses)
{
  HarnessConfig config;
  config.mutation = Mutation::flip_sign;
  const auto reports = run_all(config);
  EXPECT_FALSE(all_passed(reports));
  for (const auto& r : reports)
    expect_well_formed(r);
}

TEST(Verify, EmptyRangesGiveEmptyReport)
{
  EXPECT_TRUE(run_all(HarnessConfig::none()).empty());
  HarnessConfig config;
  config.uni_routes_n = {3, 2};
  config.biv_routes_nm = {1, 0};
  config.orthogonality_nm = {1, 0};
  config.theorem2_k = {5, 4};
  config.ftra_chain_n = {1, 0};
  config.egf_alphas.clear();
  config.egf_biv_order.reset();
  config.theorem1.reset();
  config.table1 = false;
  EXPECT_TRUE(run_all(config).empty());
}

TEST(Verify, OnlyFilter)
{
  HarnessConfig config;
  config.only = "theorem2";
  const auto reports = run_all(config);
  ASSERT_EQ(reports.size(), 40u);
  for (const auto& r : reports)
    EXPECT_EQ(r.name, "theorem2");
  config.only = "bogus";
  EXPECT_THROW(run_all(config), std::invalid_argument);
  EXPECT_EQ(check_names().size(), 9u);
}

TEST(Verify, Rendering)
{
  const auto pass = check_orthogonality(1, 2, 0);
  EXPECT_EQ(to_text(pass), "PASS orthogonality n=1 m=2 alpha=0");
  const auto j = nlohmann::json::parse(to_json_line(pass));
  EXPECT_EQ(j["check"], "orthogonality");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["parameters"]["alpha"], 0);

  const auto fail = check_egf_uni(0, 3, Mutation::flip_sign);
  const auto jf = nlohmann::json::parse(to_json_line(fail));
  EXPECT_EQ(jf["status"], "fail");
  EXPECT_EQ(jf["witness"]["index"], nlohmann::json::array({1}));
  EXPECT_EQ(jf["witness"]["lhs"], "1 + x");
  EXPECT_NE(to_text(fail).find("FAIL egf_uni"), std::string::npos);
}

TEST(Format, Tables)
{
  const Polynomial x = Polynomial::x();
  const Table<Polynomial> t{{Polynomial(1), Polynomial(0)}, {Polynomial(1) - x, Polynomial(-12)}};
  EXPECT_EQ(format::table_text(t), "    1    0\n1 - x  -12\n");
  EXPECT_EQ(format::table_csv(t), "1,0\n1 - x,-12\n");
  EXPECT_EQ(format::table_json(t), "[[1,0],[\"1 - x\",-12]]\n");
  EXPECT_EQ(format::table_latex(t), "\\begin{pmatrix}\n1 & 0 \\\\\n1 - x & -12\n\\end{pmatrix}\n");
  EXPECT_EQ(format::layers_json({t, t}).substr(0, 11), "{\"layers\":[");
  EXPECT_EQ(format::output_from_string("csv"), format::Output::csv);
  EXPECT_THROW(format::output_from_string("xml"), std::invalid_argument);
}

TEST(Format, LargeAndFractionalEntriesAreStrings)
{
  EXPECT_EQ(format::entry_json(Polynomial(factorial(20))), 2432902008176640000LL);
  EXPECT_EQ(format::entry_json(Polynomial(factorial(21))), "51090942171709440000");
  EXPECT_EQ(format::entry_json(Polynomial(Rational(Integer(1), Integer(2)))), "1/2");
}
