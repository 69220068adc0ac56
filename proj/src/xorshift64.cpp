#include "kernels.hpp"

namespace crand::abi {

const KindOps xorshift64_ops = make_ops<Xorshift64>();

}  // namespace crand::abi
