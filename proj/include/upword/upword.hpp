#pragma once

// Everything except the JSON layer (upword/json.hpp), which pulls in
// nlohmann/json.

#include "upword/constructor.hpp"
#include "upword/feasibility.hpp"
#include "upword/search.hpp"
#include "upword/structure.hpp"
#include "upword/verifier.hpp"
#include "upword/word.hpp"
