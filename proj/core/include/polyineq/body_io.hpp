#pragma once

#include <string>

#include "polyineq/body.hpp"

namespace polyineq {

// Body schema:
//   {"type":"hpolytope","normals":[[...]],"offsets":[...]}   (normals normalized on load)
//   {"type":"vpolytope","vertices":[[...]]}
//   {"type":"ball","center":[...],"radius":r}
//   {"type":"box","lower":[...],"upper":[...]}
//   {"type":"simplex","dim":d}
ConvexBody load_body(const std::string& document);
ConvexBody load_body_file(const std::string& path);
std::string body_to_json(const ConvexBody& K);
std::string body_description(const ConvexBody& K);

}  // namespace polyineq
