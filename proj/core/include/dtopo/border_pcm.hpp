#pragma once

#include "dtopo/poset.hpp"
#include "dtopo/recognizer.hpp"

namespace dtopo {

/// Border (faces whose strict neighbourhood is not an (n-1)-surface) and
/// interior, with the border split into components. Rank-0 posets have an
/// empty border. Throws DomainError on the empty poset.
BorderDecomposition border(const SuborderView& p, RecognizerOptions options = {});

/// Poset-based connected manifold test.
PcmVerdict is_pcm(const SuborderView& p, RecognizerOptions options = {});

/// Smooth PCM test: additionally every border component is an
/// (n-1)-surface and border neighbourhoods are smooth (n-1)-PCMs.
PcmVerdict is_smooth_pcm(const SuborderView& p, RecognizerOptions options = {});

/// Condition (C) on a simplicial n-PCM, n >= 2. Throws DomainError when the
/// precondition does not hold.
bool check_condition_c(const SuborderView& p, RecognizerOptions options = {});

}  // namespace dtopo
