"""
Cuadratura tanh-sinh sobre segmentos rectos del plano complejo.

x = tanh(π/2·sinh t), w = π/2·cosh t / cosh²(π/2·sinh t). Los nodos se
guardan como distancia al extremo (1 - |x| = 2/(e^{2u}+1)) para no perder
dígitos al acercarse a las singularidades logarítmicas de los extremos.
En cada nivel se agregan solo los nodos impares y se reutiliza la suma
anterior.
"""

from ...models.precision.precision import ApComplex
from ...models.quadrature.quadrature import QuadResult, Segment
from ...services.log.log_service import LogService
from ...utils.errors import QuadratureError

# (nivel, dps) → ((distancia, peso), ...)
_NODE_CACHE = {}


class QuadratureService:

    MAX_LEVEL = 12
    MIN_LEVEL = 3

    @staticmethod
    def level_nodes(level, ctx):
        key = (level, ctx.dps)
        cached = _NODE_CACHE.get(key)
        if cached is not None:
            return cached

        mp = ctx.mp
        h = mp.mpf(2) ** (-level)
        half_pi = mp.pi / 2
        floor = mp.mpf(10) ** (-ctx.dps)
        step = 1 if level == 0 else 2

        nodes = []
        k = 1
        while True:
            t = k * h
            u = half_pi * mp.sinh(t)
            e2u = mp.exp(2 * u)
            offset = 2 / (e2u + 1)
            if offset < floor:
                break
            weight = half_pi * mp.cosh(t) * 4 * e2u / (e2u + 1) ** 2
            nodes.append((offset, weight))
            k += step

        _NODE_CACHE[key] = tuple(nodes)
        return _NODE_CACHE[key]

    @staticmethod
    def integrate_segment(f, seg, ctx, tolerance=None):
        if not isinstance(seg, Segment):
            raise TypeError("El campo 'seg' debe ser de tipo 'Segment'.")

        mp = ctx.mp
        z0 = mp.mpc(seg.z0)
        z1 = mp.mpc(seg.z1)
        half = (z1 - z0) / 2
        mid = (z0 + z1) / 2
        tolerance = ctx.tolerance if tolerance is None else tolerance

        def sample(z):
            value = f(z)
            if not mp.isfinite(value):
                LogService.create_log(
                    {
                        "module": f"{QuadratureService.__name__}.{QuadratureService.integrate_segment.__name__}",
                        "message": f"Integrando no finito en z = {mp.nstr(z, 15)}",
                    }
                )
                raise QuadratureError("El integrando no es finito en un nodo")
            return value

        raw = mp.pi / 2 * sample(mid)
        previous = None
        for level in range(QuadratureService.MAX_LEVEL + 1):
            for offset, weight in QuadratureService.level_nodes(level, ctx):
                step = half * offset
                # nodos que redondean al extremo se descartan
                for z in (z1 - step, z0 + step):
                    if z != z0 and z != z1:
                        raw += weight * sample(z)

            estimate = raw * half / mp.mpf(2) ** level
            if previous is not None:
                error = abs(estimate - previous)
                if level >= QuadratureService.MIN_LEVEL and error <= tolerance * max(1, abs(estimate)):
                    return QuadResult(
                        value=ApComplex.from_value(estimate, ctx),
                        error_estimate=error,
                        levels_used=level,
                    )
            previous = estimate

        LogService.create_log(
            {
                "module": f"{QuadratureService.__name__}.{QuadratureService.integrate_segment.__name__}",
                "message": f"tanh-sinh no convergió en {QuadratureService.MAX_LEVEL} niveles",
            }
        )
        raise QuadratureError("La cuadratura no convergió en el nivel máximo")
