#include "kernels.hpp"

namespace crand::abi {

const KindOps xorshift128plus_ops = make_ops<Xorshift128Plus>();

}  // namespace crand::abi
