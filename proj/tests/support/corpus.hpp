#pragma once

#include <string>
#include <vector>

namespace borelreg::testing {

// Canonical inputs: print(parse(s)) == s for each entry.
inline const std::vector<std::string>& expression_corpus() {
  static const std::vector<std::string> corpus{
      "(x1)",
      "(1)",
      "(x1^2, x2^2)",
      "(x1^3, x2^2)",
      "(x1*x2, x2^3)",
      "(x1^2, x1*x2, x2^3)",
      "(x1^2*x3, x2^5*x4^2)",
      "(x3^4, x1*x2*x3)",
      "(x1, x2, x3, x4, x5)",
      "(x10^2, x1)",
      "sbt(x2^6*x3^7)",
      "sbt(x1^3)",
      "sbt(x1*x2*x3)",
      "sbt(x2^2*x4)",
      "sbt(x1^4*x2)",
      "sbt(x3^5)",
      "sbtc(x2^2, x1*x3)",
      "sbtc(x2^3)",
      "sbtc(x1^2*x2, x3^2, x2*x4)",
      "dfixp(x2^10; 1|2|4)",
      "dfixp(x1^5; 1|2)",
      "dfixp(x3^7; 1|2|6|12)",
      "dfix(x2^7, x3^10, x5^17; 1|2|6|12)",
      "dfix(x1^2, x2^7, x3^16; 1|4|12)",
      "dfix(x1^3, x2^10; 1|2|4)",
      "dfix(x2^9; 1|3)",
      "dfix(x1^2, x2^9; 1|3)",
      "(x1^2) + (x2^3)",
      "(x1) + (x2) + (x3)",
      "(x1, x2) * (x1, x2)",
      "(x1) * (x2) * (x3^2)",
      "(x1^2) + ((x1, x2) * (x2))",
      "((x1^2) + (x2)) * (x3)",
      "((x1) + (x2)) * ((x1) + (x3))",
      "sbt(x1*x2) + sbt(x3^2)",
      "sbt(x2^2) * sbt(x3)",
      "intersect((x1^2, x2), (x1, x2^2))",
      "intersect(sbt(x2^3), sbt(x1*x3))",
      "intersect((x1) + (x2), (x2^2))",
      "intersect((x1, x2) * (x1, x2), (x1^3, x2^3), (x1*x2))",
      "intersect(dfixp(x2^4; 1|2), sbt(x2^3))",
      "dfixp(x2^4; 1|2) + (x3^9)",
      "dfix(x1^2, x3^5; 1|2) * (x1, x2, x3)",
      "intersect((x1), (x2)) * (x3)",
      "sbtc(x1*x2, x2^2) + dfixp(x2^3; 1|3)",
      "(x1^100, x2^200)",
      "(x1*x2*x3*x4*x5*x6)",
      "sbt(x4^2*x5)",
      "dfix(x1, x2^2, x3^3; 1|2|4|12)",
      "(1) * (x1^2)",
  };
  return corpus;
}

}  // namespace borelreg::testing
