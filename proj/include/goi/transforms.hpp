// Machine-to-machine constructions: one move per step, stay elimination,
// the clock that makes a machine halt, and the pointer-equality routine.
#pragma once

#include <string>

#include "goi/ndpm.hpp"

namespace goi {

// A rewritten machine plus the way its pseudo-configurations relate to the
// original ones: states keep their ids, extra pointers start on ⋆.
struct Transformed {
  Machine machine;
  int extra_pointers = 0;
  PseudoConfiguration map(const PseudoConfiguration& c) const;
};

// Each transition moving pointers j1 < ... < jm (m >= 2) becomes a chain
// through m-1 fresh states, moving one pointer per link in ascending order.
Transformed one_move_normalize(const Machine& m);

// Removes transitions that move no pointer. A premise whose stay closure
// reaches a premise without transitions gets an explicit accept; a stay
// cycle is replaced by a two-state forward/backward loop on pointer 1.
Transformed eliminate_stays(const Machine& m);

// eliminate_stays after one_move_normalize: the form the operator encoding needs.
Transformed normalize_for_encoding(const Machine& m);

struct ClockParameters {
  int d = 0;       // p + ceil(log2(3^p |Q|))
  int clocks = 0;  // d + 1
};
ClockParameters clock_parameters(const Machine& m);

// Adds d+1 clock pointers. Every state gets a fresh copy (same name, same
// id) and a running copy "<name>@run". A step from a fresh state with every
// clock on ⋆ advances all clocks; afterwards the first clock ticks on each
// step and a clock reading ⋆ carries into the next one. The last clock
// reading ⋆, or several clocks on ⋆, rejects. On the empty word every clock
// always reads ⋆; there a running state settles the verdict of the original
// machine directly, which is computable because that tape has one cell.
Transformed make_acyclic(const Machine& m);

// The routine answering "do pointers j1 and j2 sit on the same cell?" with
// pointer j3 (on ⋆) as a counter. Adds fresh states named after `prefix`
// and returns the entry state. Pointers are numbered from 1.
StateId add_sensing_routine(Machine& m, int j1, int j2, int j3, StateId on_equal, StateId on_unequal,
                            const std::string& prefix = "sense");

}  // namespace goi
