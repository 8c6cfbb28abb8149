#include "regrange/errors.hpp"

namespace regrange {

OutOfRange::OutOfRange(long long requested, long long min_reg, long long max_reg)
    : InvalidInput("regularity " + std::to_string(requested) + " is outside the attainable interval [" +
                   std::to_string(min_reg) + "," + std::to_string(max_reg) + "]"),
      requested_(requested),
      min_reg_(min_reg),
      max_reg_(max_reg) {}

}  // namespace regrange
