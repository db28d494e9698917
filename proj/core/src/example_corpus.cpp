#include "alia/example_corpus.hpp"

namespace alia {

const std::vector<ExampleFile>& builtin_examples() {
  static const std::vector<ExampleFile> files = {
      {"ex217.alia",
       "4-dimensional Nijenhuis bialgebra, triangular with r = e1xe2 - e2xe1",
       "# 4-dimensional Nijenhuis left Alia bialgebra.\n"
       "# Triangular: comul equals the comultiplication induced by tensor r.\n"
       "dim 4\n"
       "bracket 3 1 = 1*1\n"
       "bracket 4 1 = 1*3\n"
       "comul 3 = -1*(1,2)\n"
       "comul 4 = -1*(3,2)\n"
       "map N = 1*(1<-1) + 1*(1<-2) + 1*(2<-2) + 1*(3<-3) + 1*(4<-4)\n"
       "map S = 1*(1<-1) + -1*(1<-2) + 1*(2<-2) + 1*(3<-3) + -1*(1<-4) + 1*(4<-4)\n"
       "tensor r = 1*(1,2) + -1*(2,1)\n"},
      {"ex314.alia",
       "the same bracket with the Yang-Baxter solution r = e1xe2 - e2xe1",
       "# Antisymmetric solution of the left Alia Yang-Baxter equation.\n"
       "dim 4\n"
       "bracket 3 1 = 1*1\n"
       "bracket 4 1 = 1*3\n"
       "tensor r = 1*(1,2) + -1*(2,1)\n"},
      {"ex511.alia",
       "symplectic structure and derived Nijenhuis map, parameterized by lambda",
       "# Symplectic form omega(e2,e4) = lambda and the Nijenhuis map it induces\n"
       "# through the Yang-Baxter solution r = e2xe3 - e3xe2.\n"
       "dim 4\n"
       "param lambda\n"
       "bracket 3 1 = 1*1\n"
       "bracket 4 1 = 1*3\n"
       "tensor r = 1*(2,3) + -1*(3,2)\n"
       "form omega = lambda*(2,4) + -1*lambda*(4,2)\n"
       "map N = -1*lambda*(3<-4)\n"},
      {"ex58.alia",
       "2-dimensional abelian bracket with nondegenerate r and omega = r inverse",
       "# Zero bracket; omega is the inverse of r, so the induced Nijenhuis map\n"
       "# is the identity.\n"
       "dim 2\n"
       "bracket\n"
       "tensor r = 1*(1,2) + -1*(2,1)\n"
       "form omega = -1*(1,2) + 1*(2,1)\n"},
      {"dual2.alia",
       "2-dimensional D-bialgebra with Nijenhuis pair (f, F) and special maps",
       "# Truncated polynomial product (e1 the unit, e2^2 = 0) with the socle\n"
       "# comultiplication; f and G multiply by e2, g and F are the identity.\n"
       "dim 2\n"
       "bracket 1 1 = 1*1\n"
       "bracket 1 2 = 1*2\n"
       "bracket 2 1 = 1*2\n"
       "comul 2 = 1*(2,2)\n"
       "map f = 1*(2<-1)\n"
       "map g = 1*(1<-1) + 1*(2<-2)\n"
       "map F = 1*(1<-1) + 1*(2<-2)\n"
       "map G = 1*(2<-1)\n"},
  };
  return files;
}

}  // namespace alia
