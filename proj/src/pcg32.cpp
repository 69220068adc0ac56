#include "kernels.hpp"

namespace crand::abi {

const KindOps pcg32_ops = make_ops<Pcg32>();

}  // namespace crand::abi
