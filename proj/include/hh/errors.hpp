#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HH_ERROR(Name)                        \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  };

HH_ERROR(NotAComplex)
HH_ERROR(RankTooLarge)
HH_ERROR(NotDominant)
HH_ERROR(BudgetExceeded)
HH_ERROR(NotSubmodule)
HH_ERROR(MissingWeightSpace)
HH_ERROR(WindowNotClosed)
HH_ERROR(WitnessNotInvariant)
HH_ERROR(UnsupportedRank)
HH_ERROR(UnsupportedWeight)
HH_ERROR(OddParity)
HH_ERROR(InvalidArgument)

#undef HH_ERROR

}  // namespace hh
