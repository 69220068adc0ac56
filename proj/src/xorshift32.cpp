#include "kernels.hpp"

namespace crand::abi {

const KindOps xorshift32_ops = make_ops<Xorshift32>();

}  // namespace crand::abi
