#pragma once

#include "octupolar/errors.hpp"
#include "octupolar/macaulay.hpp"
#include "octupolar/normal_form.hpp"
#include "octupolar/params.hpp"
#include "octupolar/poly.hpp"
#include "octupolar/resultants.hpp"
#include "octupolar/spectra.hpp"
#include "octupolar/surfaces.hpp"
#include "octupolar/tensor3.hpp"
