#include "kernels.hpp"

namespace crand::abi {

const KindOps kiss_ops = make_ops<Kiss>();

}  // namespace crand::abi
