// Everything at once.
#pragma once

#include "cendn/autom.hpp"
#include "cendn/closure.hpp"
#include "cendn/conformal.hpp"
#include "cendn/hermite.hpp"
#include "cendn/hseq.hpp"
#include "cendn/ideal.hpp"
#include "cendn/linalg.hpp"
#include "cendn/operator.hpp"
#include "cendn/render.hpp"
#include "cendn/smith.hpp"
#include "cendn/weyl.hpp"
