#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "swell/output.hpp"

using namespace swell;

TEST(Output, NumberFormatting) {
  EXPECT_EQ(format_number(0.99500959, 4), "0.995");
  EXPECT_EQ(format_number(1.0 / 3.0, 8), "0.33333333");
  EXPECT_EQ(format_number(1.234e-9, 8), "1.234e-09");
  EXPECT_EQ(format_number(123456789.0, 8), "1.2345679e+08");
  EXPECT_EQ(format_number(NAN, 8), "nan");
}

TEST(Output, Csv) {
  Table t{{"k", "kind", "flag", "n"}, {{0.5, std::string("a,b"), true, 3LL}, {NAN, std::string("x"), false, 4LL}}};
  std::ostringstream out;
  write_csv(out, t, 8);
  EXPECT_EQ(out.str(), "k,kind,flag,n\n0.5,\"a,b\",true,3\n,x,false,4\n");
}

TEST(Output, Json) {
  Table t{{"k", "tau"}, {{0.123456789, NAN}}};
  std::ostringstream out;
  write_json(out, t, 4);
  EXPECT_EQ(out.str(), "[\n {\n  \"k\": 0.1235,\n  \"tau\": null\n }\n]\n");
}

TEST(Output, RowWidthChecked) {
  Table t{{"k"}, {{1.0, 2.0}}};
  std::ostringstream out;
  EXPECT_THROW(write_csv(out, t, 8), std::logic_error);
}
