#pragma once

#include <string_view>

namespace rrg::detail {

/* Reference sessions for the examples suite. The same text is checked in
 * under tests/golden/, and the acceptance run confirms the two copies are
 * identical bytes. */

constexpr std::string_view kGoldenBackwardA3 =
    R"(backward a=3
start 14,14,11,10,7,7,5,5,2,1
move backward pair 5->4 14,14,11,10,7,7,4,4,2,1
move backward pair 4->1 14,14,11,10,7,7,4,3,1,1
move backward pair 7->6 14,14,11,10,6,6,4,3,1,1
move backward pair 6->3 14,14,11,10,6,5,3,3,1,1
move backward pair 14->13 13,13,11,10,6,5,3,3,1,1
move backward pair 13->10 13,12,10,10,6,5,3,3,1,1
move backward pair 10->9 13,12,9,9,6,5,3,3,1,1
move backward pair 9->8 13,12,8,8,6,5,3,3,1,1
move backward pair 8->5 13,12,8,7,5,5,3,3,1,1
move backward singleton 12->11 13,11,8,7,5,5,3,3,1,1
move backward singleton 11->10 13,10,8,7,5,5,3,3,1,1
move backward singleton 10->9 13,9,8,7,5,5,3,3,1,1
move backward singleton 13->12 12,9,8,7,5,5,3,3,1,1
move backward singleton 12->11 11,9,8,7,5,5,3,3,1,1
move backward singleton 11->10 10,9,8,7,5,5,3,3,1,1
base 10,9,8,7,5,5,3,3,1,1
mu 10,4,4
nu 3,3,0,0
)";

constexpr std::string_view kGoldenForwardA2 =
    R"(forward a=2
base 8,8,6,6,4,3,2,1
mu 2,2
nu 9,6,3,0
move forward pair 8->9 9,9,6,6,4,3,2,1
move forward pair 6->7 9,9,7,7,4,3,2,1
move forward singleton 4->5 9,9,7,7,5,3,2,1
move forward singleton 5->10 10,8,8,6,6,3,2,1
move forward singleton 10->11 11,8,8,6,6,3,2,1
move forward singleton 11->12 12,8,8,6,6,3,2,1
move forward singleton 12->13 13,8,8,6,6,3,2,1
move forward singleton 13->14 14,8,8,6,6,3,2,1
move forward singleton 14->15 15,8,8,6,6,3,2,1
move forward singleton 15->16 16,8,8,6,6,3,2,1
move forward singleton 16->17 17,8,8,6,6,3,2,1
move forward singleton 3->4 17,8,8,6,6,4,2,1
move forward singleton 4->9 17,9,7,7,5,5,2,1
move forward singleton 9->10 17,10,7,7,5,5,2,1
move forward singleton 10->11 17,11,7,7,5,5,2,1
move forward singleton 11->12 17,12,7,7,5,5,2,1
move forward singleton 12->13 17,13,7,7,5,5,2,1
move forward singleton 2->3 17,13,7,7,5,5,3,1
move forward singleton 3->8 17,13,8,6,6,4,4,1
move forward singleton 8->9 17,13,9,6,6,4,4,1
lambda 17,13,9,6,6,4,4,1
)";

}  // namespace rrg::detail
