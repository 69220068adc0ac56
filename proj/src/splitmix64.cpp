#include "kernels.hpp"

namespace crand::abi {

const KindOps splitmix64_ops = make_ops<SplitMix64>();

}  // namespace crand::abi
