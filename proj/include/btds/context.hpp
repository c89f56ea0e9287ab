#ifndef BTDS_CONTEXT_HPP
#define BTDS_CONTEXT_HPP

#include "btds/homotopy.hpp"
#include "btds/selection.hpp"

namespace btds {

// A matched set of verified homotopy contexts over one target space: the same
// anchor story told for the plain, iteration and path variants.
struct ContextBundle {
    std::string name;
    HomotopyContext h;
    HomotopyContext hi;
    HomotopyContext ph;
};

// The bundled context library for a space:
//  - "const@p" for each point p: a one-point system mapped constantly to p
//    (every variant anchored at {(p,p)}),
//  - "id" (spaces with at least two points): the identity system on the space
//    itself, whose plain-homotopy anchors range over every point; its
//    iteration anchors start the orbit at point 0 and its path variant reuses
//    the constant path at 0, since no single path can anchor a whole space.
// Every context is verified during construction; a verification failure here
// is a bug, not data.
std::vector<ContextBundle> make_context_library(const BitopSpace& s, int k = 1);

}  // namespace btds

#endif
