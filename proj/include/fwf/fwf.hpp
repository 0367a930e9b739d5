#pragma once

#include "certifier.hpp"
#include "chain_complex.hpp"
#include "collapse.hpp"
#include "complex.hpp"
#include "corpus.hpp"
#include "cubical.hpp"
#include "fillable.hpp"
#include "gcd.hpp"
#include "golod.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "rings.hpp"
#include "scm.hpp"
#include "shelling.hpp"
#include "snf.hpp"
#include "tor_algebra.hpp"
