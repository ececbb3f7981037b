#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "rsstilt/csv.hpp"
#include "rsstilt/sampling.hpp"
#include "support.hpp"

using namespace rsstilt;

namespace {

UrssSample parse(const std::string& text) {
  std::istringstream in(text);
  return csv::read_urss(in);
}

}  // namespace

TEST(Csv, RoundTripIsBitExact) {
  const UrssSample x = draw_urss(DistributionSpec::logistic(0.1, 1.0), named_design(5), RngSeed{1, 0});
  std::ostringstream out;
  csv::write_urss(out, x);
  EXPECT_EQ(parse(out.str()), x);
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, std::numeric_limits<double>::denorm_min(), 1e308}) {
    EXPECT_EQ(csv::parse_double(csv::format(v), 1), v);
  }
}

TEST(Csv, CommentsBlanksAndOrder) {
  const UrssSample x = parse("# generated\nrank, value\n\n2,5\n1,1\n# note\n1,2\r\n2,+6\n");
  EXPECT_EQ(x, UrssSample({{1, 2}, {5, 6}}));
}

TEST(Csv, Errors) {
  EXPECT_KIND(parse("value,rank\n1,2\n"), parse_error);
  EXPECT_KIND(parse(""), parse_error);
  EXPECT_KIND(parse("rank,value\n"), invalid_sample);
  EXPECT_KIND(parse("rank,value\n1,2\n1,x\n"), parse_error);
  EXPECT_KIND(parse("rank,value\n1,2,3\n"), parse_error);
  EXPECT_KIND(parse("rank,value\n0,2\n"), parse_error);
  EXPECT_KIND(parse("rank,value\n1,2\n3,4\n"), invalid_design);
  EXPECT_KIND(parse("rank,value\n1,2\n"), invalid_design);
  EXPECT_KIND(parse("rank,value\n1,2\n2,nan\n"), invalid_sample);
  try {
    parse("rank,value\n1,2\n2,oops\n");
    FAIL();
  } catch (const error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Csv, Population) {
  std::istringstream in("y,concomitant\n1.5,2\n-3,0.25\n");
  const auto pop = csv::read_population(in);
  ASSERT_EQ(pop.size(), 2u);
  EXPECT_EQ(pop[1].y, -3.0);
  EXPECT_EQ(pop[1].concomitant, 0.25);
}
