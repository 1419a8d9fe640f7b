#pragma once

#include "errors.hpp"
#include "gallery.hpp"
#include "harmonic.hpp"
#include "mobius.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "portrait.hpp"
#include "rational.hpp"
#include "report_json.hpp"
#include "text_format.hpp"
#include "topology.hpp"
#include "verify.hpp"
