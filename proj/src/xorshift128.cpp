#include "kernels.hpp"

namespace crand::abi {

const KindOps xorshift128_ops = make_ops<Xorshift128>();

}  // namespace crand::abi
