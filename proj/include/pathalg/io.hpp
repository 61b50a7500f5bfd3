// JSON interchange for every externally visible value. JSON is the single
// interchange format; text renderings are derived and never parsed back.
// Serialization uses ordered maps so equal values dump byte-identically.
#ifndef PATHALG_IO_HPP
#define PATHALG_IO_HPP

#include <nlohmann/json.hpp>

#include "pathalg/koszul.hpp"

namespace pathalg {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q);
std::shared_ptr<const Quiver> quiver_from_json(const Json& j);

Json path_to_json(const Path& p);
Path path_from_json(const Quiver& q, const Json& j);

// Input file format. Relations are coefficient/path term lists; a bare
// array of arrow names is the monomial shortcut.
AlgebraInput input_from_json(const Json& j);
Json input_to_json(const AlgebraInput& input);
AlgebraInput load_input_file(const std::string& path);

struct OwnedGroebnerBasis {
  std::shared_ptr<const Quiver> quiver;
  std::optional<GroebnerBasis> gb;
};
Json gb_to_json(const GroebnerBasis& gb);
OwnedGroebnerBasis gb_from_json(const Json& j);

struct OwnedChainTable {
  std::shared_ptr<const Quiver> quiver;
  std::optional<ChainTable> table;
};
Json chains_to_json(const ChainTable& table);
OwnedChainTable chains_from_json(const Json& j);

Json betti_to_json(const BettiTable& table, const Quiver& q);
BettiTable betti_from_json(const Quiver& q, const Json& j);

Json report_to_json(const KoszulReport& report);
KoszulReport report_from_json(const Json& j);

}  // namespace pathalg

#endif
