#include "goi/catalog.hpp"

#include "goi/machine_io.hpp"

namespace goi {

const std::vector<CatalogEntry>& acyclic_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"accept-all", R"(pointers: 1
states: q0
initial: ⋆;q0
)", true},
      {"reject-all", R"(pointers: 1
states: q0
initial: ⋆;q0
* q0 -> reject
)", true},
      {"first-bit-one", R"(pointers: 1
states: q0 q1
initial: ⋆;q0
⋆ q0 -> +1 q1
0 q1 -> reject
)", true},
      {"all-ones", R"(pointers: 1
states: q0 scan
initial: ⋆;q0
⋆ q0 -> +1 scan
1 scan -> +1 scan
0 scan -> reject
)", true},
      {"last-bit-zero", R"(pointers: 1
states: q0 q1
initial: ⋆;q0
⋆ q0 -> -1 q1
1 q1 -> reject
)", true},
      {"even-ones", R"(pointers: 1
states: start even odd
initial: ⋆;start
⋆ start -> +1 even
0 even -> +1 even
1 even -> +1 odd
0 odd -> +1 odd
1 odd -> +1 even
⋆ odd -> reject
)", true},
      {"no-double-one", R"(pointers: 1
states: start s0 s1
initial: ⋆;start
⋆ start -> +1 s0
0 s0 -> +1 s0
1 s0 -> +1 s1
0 s1 -> +1 s0
1 s1 -> reject
)", true},
      {"even-length-backward", R"(pointers: 1
states: start odd even
initial: ⋆;start
⋆ start -> -1 odd
0/1 odd -> -1 even
0/1 even -> -1 odd
⋆ odd -> reject
)", true},
      {"guess-a-one", R"(pointers: 1
states: start scan found
initial: ⋆;start
⋆ start -> +1 scan
0/1 scan -> +1 scan
1 scan -> +1 found
0 found -> reject
)", true},
      {"ends-agree", R"(pointers: 2
states: q0 q1 q2
initial: ⋆,⋆;q0
⋆ ⋆ q0 -> +1 .2 q1
* ⋆ q1 -> .1 -2 q2
0 1 q2 -> reject
1 0 q2 -> reject
)", false},
      {"palindrome", R"(pointers: 2
states: q0 q1 c0 c1
initial: ⋆,⋆;q0
⋆ ⋆ q0 -> +1 .2 q1
0 * q1 -> .1 -2 c0
1 * q1 -> .1 -2 c1
0/1 0 c0 -> +1 .2 q1
0/1 1 c0 -> reject
0/1 1 c1 -> +1 .2 q1
0/1 0 c1 -> reject
)", false},
      {"mixed-bits", R"(pointers: 2
states: start g1 g2
initial: ⋆,⋆;start
⋆ ⋆ start -> +1 .2 g1
0/1 * g1 -> +1 .2 g1
1 * g1 -> .1 +2 g2
1 1 g2 -> .1 +2 g2
1 0 g2 -> reject
)", false},
      {"last-two-equal", R"(pointers: 2
states: start a b c
initial: ⋆,⋆;start
⋆ ⋆ start -> -1 .2 a
* ⋆ a -> .1 -2 b
* 0/1 b -> .1 -2 c
0 1 c -> reject
1 0 c -> reject
)", false},
  };
  return entries;
}

const std::vector<CatalogEntry>& looping_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"stay-forever", R"(pointers: 1
states: q0
initial: ⋆;q0
⋆ q0 -> .1 q0
)", true},
      {"run-forever", R"(pointers: 1
states: q0
initial: ⋆;q0
* q0 -> +1 q0
)", true},
      {"bounce", R"(pointers: 1
states: q0 q1
initial: ⋆;q0
⋆ q0 -> +1 q1
0/1 q1 -> -1 q0
)", true},
      {"spin-after-one", R"(pointers: 1
states: q0 scan spin
initial: ⋆;q0
⋆ q0 -> +1 scan
0 scan -> +1 scan
1 scan -> +1 spin
* spin -> +1 spin
)", true},
      {"reject-or-spin", R"(pointers: 2
states: q
initial: ⋆,⋆;q
⋆ ⋆ q -> +1 .2 q
0 * q -> reject
1 * q -> .1 +2 q
)", true},
      {"wander", R"(pointers: 2
states: q
initial: ⋆,⋆;q
* * q -> +1 .2 q
* * q -> .1 -2 q
1 1 q -> reject
)", true},
  };
  return entries;
}

Machine load(const CatalogEntry& e) {
  return parse_machine(e.text, e.name);
}

}  // namespace goi
