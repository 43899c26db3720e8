#pragma once

// Solution spaces written out by hand from the linear relations among the
// coefficients a_e of Q. One generator per free coefficient.

#include <string>
#include <vector>

#include "momentlab/solver/solver.hpp"

namespace momentlab::oracle {

inline std::string data_path(const std::string& rel) { return std::string(MOMENTLAB_DATA_DIR) + "/" + rel; }

// window [-3,5]; a_-3 = 0, a_-2 = -a_4/2, a_-1 = -a_2 - 9a_4/2 + 5a_5/4, a_3 = -15a_5/4
inline SolutionSpace e9d8_relations() {
  const Window w{-3, 5};
  return SolutionSpace::spanned_by(w, {
                                          parse_laurent("1"),
                                          parse_laurent("z"),
                                          parse_laurent("z^2 - z^-1"),
                                          parse_laurent("z^4 - 1/2*z^-2 - 9/2*z^-1"),
                                          parse_laurent("z^5 - 15/4*z^3 + 5/4*z^-1"),
                                      });
}

// window [-5,4]; a_-5 = 0, a_1..a_4 determined by a_-1..a_-4 over Q(sqrt 5)
inline SolutionSpace a5_relations() {
  const Window w{-5, 4};
  return SolutionSpace::spanned_by(
      w, {
             parse_laurent("1"),
             parse_laurent("z^-1 + (-7/2+3/2*sqrt(5))*z"),
             parse_laurent("z^-2 + (-304+136*sqrt(5))*z + (-843/2+377/2*sqrt(5))*z^2"),
             parse_laurent("z^-3 + (-2784+1245*sqrt(5))*z + (-10713+4791*sqrt(5))*z^2"
                           " + (-15127/2+6765/2*sqrt(5))*z^3"),
             parse_laurent("z^-4 + (1780-796*sqrt(5))*z + (-69336+31008*sqrt(5))*z^2"
                           " + (-97904+43784*sqrt(5))*z^3 + (-39603/2+17711/2*sqrt(5))*z^4"),
         });
}

}  // namespace momentlab::oracle
