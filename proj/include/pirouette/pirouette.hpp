#pragma once

#include "pirouette/core.hpp"
#include "pirouette/lexer.hpp"
#include "pirouette/local/concept.hpp"
#include "pirouette/local/natbool.hpp"
#include "pirouette/local/lambda.hpp"
#include "pirouette/chor.hpp"
#include "pirouette/semantics.hpp"
#include "pirouette/types.hpp"
#include "pirouette/equivalence.hpp"
#include "pirouette/control.hpp"
#include "pirouette/control_semantics.hpp"
#include "pirouette/merge.hpp"
#include "pirouette/epp.hpp"
#include "pirouette/system.hpp"
#include "pirouette/parser.hpp"
#include "pirouette/harness/gen.hpp"
#include "pirouette/harness/theorems.hpp"
