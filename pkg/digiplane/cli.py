import functools
import logging

import click
import pandas as pd

from .exceptions import BudgetExceeded, DigiplaneError, ImageCountError

EXIT_INPUT_ERROR = 1
EXIT_BUDGET = 2

BUILDERS = ("axis", "slanted", "edge-union", "wedge")


def _handle_errors(fn):
    """Map library errors to exit codes: 2 for an exhausted budget, 1 otherwise."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceeded as e:
            click.echo(f"Unknown: {e} ({_stats(e.stats)})", err=True)
            raise SystemExit(EXIT_BUDGET)
        except DigiplaneError as e:
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(EXIT_INPUT_ERROR)
    return wrapper


def _stats(stats) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(stats.items()))


def _read(stream, fmt):
    from digiplane.formats import parse_image
    return parse_image(stream.read(), fmt)


def _window(text, image, pad=None):
    from digiplane.core import Window
    if text:
        return Window.parse(text)
    return Window.around(image, Window.DEFAULT_PAD if pad is None else pad)


def _build(kind, images, slope):
    from digiplane import retraction
    if kind in ("axis", "slanted"):
        if len(images) != 1:
            raise ImageCountError(f"'{kind}' takes exactly one image, got {len(images)}")
        if kind == "axis":
            return retraction.build_axis_retraction(images[0])
        return retraction.build_slanted_retraction(images[0], slope)
    if len(images) != 2:
        raise ImageCountError(f"'{kind}' takes exactly two images, got {len(images)}")
    if kind == "edge-union":
        return retraction.build_edge_union_retraction(*images)
    return retraction.build_wedge_retraction(*images)


format_option = click.option('--format', 'fmt', type=click.Choice(["json", "grid"]), default=None,
                             help="Input format (detected when omitted)")


@click.group()
@click.option('--log-level', envvar='DIGIPLANE_LOG_LEVEL', default='WARNING', show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False))
def main(log_level):
    """Digiplane CLI - convexity, retractions and approximate fixed points in the digital plane"""
    logging.basicConfig(level=log_level.upper(), format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.argument('image', type=click.File('r'))
@format_option
@_handle_errors
def convex(image, fmt):
    from digiplane.convexity import is_convex
    report = is_convex(_read(image, fmt))
    click.echo(str(report))
    click.echo("hull " + " ".join(str(p) for p in report.hull))


@main.command()
@click.argument('image', type=click.File('r'))
@format_option
@_handle_errors
def curve(image, fmt):
    from digiplane.convexity import decompose_disk
    report = decompose_disk(_read(image, fmt))
    click.echo("curve " + " ".join(str(p) for p in report.curve))
    click.echo(f"interior {len(report.interior)}")
    for v in report.vertices:
        click.echo(f"vertex {v} {report.angles[v]}")


@main.group()
def retract():
    """Build and verify retractions of the plane"""
    pass


@retract.command('build')
@click.argument('kind', type=click.Choice(BUILDERS))
@click.argument('images', nargs=-1, required=True, type=click.File('r'))
@click.option('--window', default=None, help="xmin,xmax,ymin,ymax (default: target grown by 2)")
@click.option('--slope', type=click.Choice(["-1", "1"]), default="-1", help="Slope for 'slanted'")
@format_option
@_handle_errors
def retract_build(kind, images, window, slope, fmt):
    from digiplane.formats import emit_table
    r = _build(kind, [_read(s, fmt) for s in images], int(slope))
    click.echo(emit_table(r.table(_window(window, r.target))), nl=False)


@retract.command('verify')
@click.argument('kind', type=click.Choice(BUILDERS))
@click.argument('images', nargs=-1, required=True, type=click.File('r'))
@click.option('--window', default=None, help="xmin,xmax,ymin,ymax (default: target grown by 2)")
@click.option('--slope', type=click.Choice(["-1", "1"]), default="-1", help="Slope for 'slanted'")
@click.option('--boundary', is_flag=True, help="Also check that points off the interior land on the curve")
@format_option
@_handle_errors
def retract_verify(kind, images, window, slope, boundary, fmt):
    from digiplane.retraction import verify_retraction
    r = _build(kind, [_read(s, fmt) for s in images], int(slope))
    report = verify_retraction(r, _window(window, r.target), check_boundary=boundary)
    click.echo(f"PASS {report.checked}" if report.passed else f"FAIL {report.failure}: {report.message}")


def _certificate_output(cert):
    from digiplane.formats import emit_table
    if cert.has_witness:
        click.echo(cert.verdict.value)
        rows = [(p.x, p.y, q.x, q.y) for p, q in cert.witness.items()]
        click.echo(emit_table(pd.DataFrame(rows, columns=["x", "y", "fx", "fy"])), nl=False)
    else:
        click.echo(f"{cert.verdict.value} {_stats(cert.stats)}")


@main.command()
@click.argument('image', type=click.File('r'))
@click.option('--budget', envvar='DIGIPLANE_BUDGET', type=int, default=None, help="Node limit for the search")
@format_option
@_handle_errors
def afpp(image, budget, fmt):
    from digiplane.afpp import AfppSearch, search_afpp_violation
    _certificate_output(search_afpp_violation(_read(image, fmt), budget or AfppSearch.DEFAULT_BUDGET))


@main.command()
@click.argument('image', type=click.File('r'))
@click.option('--budget', envvar='DIGIPLANE_BUDGET', type=int, default=None, help="Node limit for the search")
@format_option
@_handle_errors
def fpp(image, budget, fmt):
    from digiplane.afpp import AfppSearch, search_fixed_point_free
    _certificate_output(search_fixed_point_free(_read(image, fmt), budget or AfppSearch.DEFAULT_BUDGET))


@main.command()
@click.argument('name')
@click.option('--format', 'fmt', type=click.Choice(["json", "grid"]), default="json", show_default=True)
@_handle_errors
def catalog(name, fmt):
    from digiplane.catalog import get_example
    from digiplane.formats import emit_image
    click.echo(emit_image(get_example(name), fmt), nl=False)


@main.command()
@click.argument('image', type=click.File('r'))
@click.option('--window', default=None, help="xmin,xmax,ymin,ymax (default: image grown by 1)")
@click.option('--with-retraction', 'builder', type=click.Choice(["axis", "slanted"]), default=None,
              help="Draw arrows p -> r(p) for this retraction onto the image")
@click.option('--svg', 'svg_path', type=click.Path(dir_okay=False, writable=True), default=None)
@click.option('--html', 'html_path', type=click.Path(dir_okay=False, writable=True), default=None)
@format_option
@_handle_errors
def render(image, window, builder, svg_path, html_path, fmt):
    from digiplane.viz import LatticeViz
    X = _read(image, fmt)
    r = _build(builder, [X], -1) if builder else None
    win = _window(window, X, pad=1)
    viz = LatticeViz()
    click.echo(viz.ascii(X, win), nl=False)
    if svg_path:
        with open(svg_path, "w", encoding="utf-8") as f:
            f.write(viz.svg(X, r, win))
    if html_path:
        viz.figure(X, r, win).write_html(html_path)


if __name__ == '__main__':
    main()
