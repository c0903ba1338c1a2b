#include "tiltlab/errors.hpp"

namespace tiltlab {

void throw_invariant(const std::string& what) { throw InvariantError(what); }

}  // namespace tiltlab
