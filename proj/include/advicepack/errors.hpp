#pragma once

#include <stdexcept>
#include <string>

namespace advicepack {

#define ADVICEPACK_DEFINE_ERROR(Name)                           \
  struct Name : std::runtime_error {                            \
    explicit Name(const std::string& msg)                       \
        : std::runtime_error(std::string(#Name) + ": " + msg) {} \
  }

ADVICEPACK_DEFINE_ERROR(OverflowRejected);
ADVICEPACK_DEFINE_ERROR(ValueTooWide);
ADVICEPACK_DEFINE_ERROR(ConfigurationExplosion);
ADVICEPACK_DEFINE_ERROR(BudgetExhausted);
ADVICEPACK_DEFINE_ERROR(LimitExceeded);
ADVICEPACK_DEFINE_ERROR(InvalidVector);
ADVICEPACK_DEFINE_ERROR(InvalidLevels);
ADVICEPACK_DEFINE_ERROR(InvalidParams);
ADVICEPACK_DEFINE_ERROR(UnknownSize);
ADVICEPACK_DEFINE_ERROR(NoFeasibleBin);
ADVICEPACK_DEFINE_ERROR(OutOfRange);
ADVICEPACK_DEFINE_ERROR(BadParams);
ADVICEPACK_DEFINE_ERROR(DomainError);

#undef ADVICEPACK_DEFINE_ERROR

}  // namespace advicepack
