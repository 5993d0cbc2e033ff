#include "xdeg/error.hpp"

namespace xdeg {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_group: return "NotAGroup";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::bad_family_spec: return "BadFamilySpec";
    case errc::bad_input: return "BadInput";
    case errc::not_normal: return "NotNormal";
    case errc::not_abelian: return "NotAbelian";
    case errc::not_p_group: return "NotPGroup";
    case errc::enumeration_limit_exceeded: return "EnumerationLimitExceeded";
    case errc::presentation_unverified: return "PresentationUnverified";
    case errc::not_coprime: return "NotCoprime";
    case errc::incompatible_chain: return "IncompatibleChain";
    case errc::insufficient_levels: return "InsufficientLevels";
    case errc::subgroup_enumeration_cap_exceeded: return "SubgroupEnumerationCapExceeded";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace xdeg
