#include "itsdeal/common.hpp"

namespace itsdeal {

const char* build_describe() { return ITSDEAL_BUILD_DESCRIBE; }

}  // namespace itsdeal
