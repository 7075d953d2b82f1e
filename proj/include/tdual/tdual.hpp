#pragma once

#include "tdual/error.hpp"
#include "tdual/exact/homology.hpp"
#include "tdual/exact/induced.hpp"
#include "tdual/simplicial/cohomology.hpp"
#include "tdual/bundle/circle_bundle.hpp"
#include "tdual/duality/tdual.hpp"
#include "tdual/duality/small_model.hpp"
#include "tdual/ktheory/ahss.hpp"
#include "tdual/catalog/pipeline.hpp"
#include "tdual/courant/checks.hpp"
#include "tdual/io/context_json.hpp"
#include "tdual/io/render.hpp"
