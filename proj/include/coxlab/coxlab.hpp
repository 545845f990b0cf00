#ifndef COXLAB_COXLAB_HPP_
#define COXLAB_COXLAB_HPP_

#include "affine.hpp"
#include "cli.hpp"
#include "endo.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "graph_product.hpp"
#include "linear.hpp"
#include "probes.hpp"
#include "raag.hpp"
#include "suites.hpp"
#include "system.hpp"
#include "tits.hpp"
#include "tree.hpp"
#include "walls.hpp"
#include "word.hpp"
#include "words.hpp"

#endif  // COXLAB_COXLAB_HPP_
