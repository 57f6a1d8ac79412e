#pragma once

#include "dtopo/poset.hpp"
#include "dtopo/recognizer.hpp"

namespace dtopo {

/// Recursive discrete-surface test: empty is a (-1)-surface, two
/// incomparable faces a 0-surface, otherwise connected with every strict
/// neighbourhood a (k-1)-surface where k is the rank.
SurfaceVerdict is_k_surface(const SuborderView& p, RecognizerOptions options = {});

/// Empty, or every strict neighbourhood has rank exactly rank - 1 and is
/// itself coherent.
bool is_coherent(const SuborderView& p, RecognizerOptions options = {});

}  // namespace dtopo
