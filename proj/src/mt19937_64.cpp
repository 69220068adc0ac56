#include "kernels.hpp"

namespace crand::abi {

const KindOps mt19937_64_ops = make_ops<Mt19937_64>();

}  // namespace crand::abi
