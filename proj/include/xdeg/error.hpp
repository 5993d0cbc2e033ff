#pragma once

#include <stdexcept>
#include <string>

namespace xdeg {

enum class errc {
  not_a_group,
  order_cap_exceeded,
  bad_family_spec,
  bad_input,
  not_normal,
  not_abelian,
  not_p_group,
  enumeration_limit_exceeded,
  presentation_unverified,
  not_coprime,
  incompatible_chain,
  insufficient_levels,
  subgroup_enumeration_cap_exceeded,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace xdeg
