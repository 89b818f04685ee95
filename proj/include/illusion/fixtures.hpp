#pragma once

#include "illusion/network.hpp"

namespace illusion {

// Nine-node network with a red 4-clique minority that every node sees as its
// local majority. Node order: A B C D (red), E E' F G H (blue).
LabelledNetwork fixture_fig1();

} // namespace illusion
