#pragma once

#include "hermitian/bounds.hpp"
#include "hermitian/census.hpp"
#include "hermitian/codes.hpp"
#include "hermitian/field.hpp"
#include "hermitian/form.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/intersection.hpp"
#include "hermitian/linalg.hpp"
#include "hermitian/sampling.hpp"
#include "hermitian/search.hpp"
#include "hermitian/serialize.hpp"
#include "hermitian/surface.hpp"
