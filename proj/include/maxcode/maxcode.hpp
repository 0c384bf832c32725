#pragma once

// Convenience header pulling in the whole library.

#include "alphabet.hpp"
#include "dfa.hpp"
#include "error.hpp"
#include "io.hpp"
#include "nfa.hpp"
#include "operators.hpp"
#include "order.hpp"
#include "regex.hpp"
#include "stdprops.hpp"
#include "transducer.hpp"
