#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copath/criteria.hpp"
#include "copath/quiver.hpp"
#include "copath/shape.hpp"

namespace copath {

/// Parsed form of the line-oriented input format:
///   vertex <id>
///   arrow <id> : <src> -> <tgt> [* <mult> | * omega]
///   mode full
///   mode forbid <bundle> <bundle> ...     (one factor per line, repeatable)
///   mode generators                        (then `path` lines)
///   path <arrow> <arrow> ...               (<arrow> is bundle or bundle.index)
///   xdata <vertex> n=<int> m=<int> patterns: <p>; <p>; ...
///   instantiate <bundle>=<int>
/// '#' starts a comment. Instantiation bounds replace omega multiplicities
/// before anything else is interpreted.
struct ShapeFile {
  Quiver declared_quiver;
  std::map<BundleId, std::uint64_t> bounds;
  Quiver quiver;  // declared quiver with bounds applied
  ShapeMode mode = ShapeMode::Full;
  std::vector<BundleWord> forbid_factors;
  std::vector<Path> generator_paths;
  std::optional<XData> xdata;

  MonomialShape build_shape() const;
};

/// Throws SyntaxError (line/column) or SemanticError (offending token).
ShapeFile parse_shape_file(const std::string& text);

ShapeFile load_shape_file(const std::string& filename);

/// "x" is index 0 of bundle x; "x.2" is index 2.
Arrow parse_arrow_token(const Quiver& q, const std::string& token);

/// Space-separated arrow tokens; a single vertex id or "e_<vertex>" denotes
/// the trivial path.
Path parse_path_tokens(const Quiver& q, const std::vector<std::string>& tokens);

}  // namespace copath
