// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warb {

enum class Errc {
  DuplicateEdge,
  SelfLoop,
  NonPositiveConductance,
  VertexOutOfRange,
  InvalidFamilyParameter,
  GraphTooLargeForEnumeration,
  SubsetTooSmall,
  SubsetDisconnected,
  NoFeasibleSubgraph,
  UnsupportedClosedForm,
  IsolatedVertex,
  NoEdges,
  GraphDisconnected,
  SingularSystem,
  InvalidLaw,
  InvalidConfig,
  DimensionTooLarge,
  ParseError,
  IoFailure,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NonPositiveConductance: return "NonPositiveConductance";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::InvalidFamilyParameter: return "InvalidFamilyParameter";
    case Errc::GraphTooLargeForEnumeration: return "GraphTooLargeForEnumeration";
    case Errc::SubsetTooSmall: return "SubsetTooSmall";
    case Errc::SubsetDisconnected: return "SubsetDisconnected";
    case Errc::NoFeasibleSubgraph: return "NoFeasibleSubgraph";
    case Errc::UnsupportedClosedForm: return "UnsupportedClosedForm";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::NoEdges: return "NoEdges";
    case Errc::GraphDisconnected: return "GraphDisconnected";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::InvalidLaw: return "InvalidLaw";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace warb
