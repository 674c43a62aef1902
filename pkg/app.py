"""
1-Perfect Orientation Workbench
Streamlit application for recognizing 1-perfectly orientable graphs and
inspecting their certificates

Run with: streamlit run app.py
"""
import sys
from datetime import datetime
from pathlib import Path

import pandas as pd
import streamlit as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

import config
from classes.registry import CLASSES, in_class
from errors import OnePOError, PreconditionError
from reports.charts import ChartGenerator, grid_positions
from reports.pdf_generator import PDFReportGenerator
from structural.recognize import RecognitionMode, certify_2sat, recognize, recognize_block_cactus
from structural.sequence import build_sequence
from workbench.crosscheck import SUITES, crosscheck
from workbench.generators import KINDS, GeneratorSpec, generate
from workbench.serialize import TextFormat, certificate_to_json, detect_format, parse, serialize, to_graph6

st.set_page_config(
    page_title="1-Perfect Orientation Workbench",
    page_icon="🧭",
    layout="wide",
    initial_sidebar_state="expanded"
)

RECOGNIZERS = {
    "Structural (K4-minor-free)": lambda g: recognize(g, RecognitionMode.K4MF),
    "Structural (outerplanar)": lambda g: recognize(g, RecognitionMode.OUTERPLANAR),
    "Block-cactus": recognize_block_cactus,
    "2-SAT (any graph)": certify_2sat,
}

EXAMPLE_INPUT = "n=6\n0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 1"


def init_session_state():
    if 'graph6' not in st.session_state:
        st.session_state.graph6 = None
    if 'layout' not in st.session_state:
        st.session_state.layout = 'circular'


@st.cache_resource
def get_helpers():
    return {'charts': ChartGenerator(), 'pdf': PDFReportGenerator()}


@st.cache_data(show_spinner=False)
def run_crosscheck(n_max: int, suites: tuple):
    """Cached sweep; returns plain frames so Streamlit can hash and pickle them"""
    report = crosscheck(n_max, list(suites), workers=config.WORKERS)
    return report.summary_frame(), report.to_dataframe(), report.graphs_checked, report.elapsed


def render_sidebar():
    st.sidebar.title("🧭 1-p.o. Workbench")
    st.sidebar.markdown("Recognize graphs whose out-neighbourhoods can all be cliques")
    st.sidebar.markdown("---")

    source = st.sidebar.radio("Graph source", ["Text", "Generator"], horizontal=True)
    if source == "Text":
        text = st.sidebar.text_area("Graph (graph6, edge list, DOT or JSON)", value=EXAMPLE_INPUT, height=180)
        fmt = st.sidebar.selectbox("Format", ["auto", *[f.value for f in TextFormat]])
        if st.sidebar.button("Load graph", use_container_width=True):
            try:
                value = parse(text, detect_format(text) if fmt == "auto" else fmt)
                graph = value.host if hasattr(value, 'host') else value
                st.session_state.graph6 = to_graph6(graph)
            except (OnePOError, ValueError) as e:
                st.sidebar.error(f"Could not read graph: {e}")
    else:
        kind = st.sidebar.selectbox("Kind", KINDS, index=KINDS.index("hollowed_two_tree"))
        n = st.sidebar.number_input("n", min_value=1, max_value=40, value=8)
        seed = st.sidebar.number_input("Seed", min_value=0, value=config.GENERATOR_DEFAULTS["seed"])
        params = {"n": n, "k": max(2, int(n ** 0.5)), "hole": min(n, 5), "a": 2, "b": max(1, n - 2)}
        if st.sidebar.button("Generate", use_container_width=True):
            try:
                st.session_state.graph6 = to_graph6(generate(GeneratorSpec(kind, params, int(seed))))
                st.session_state.layout = 'grid' if kind == 'grid' else 'circular'
            except OnePOError as e:
                st.sidebar.error(f"Generator error: {e}")

    st.sidebar.markdown("---")
    st.sidebar.markdown("### About")
    st.sidebar.markdown(
        "Accepting certificates carry a 1-perfect orientation; rejecting ones "
        "carry an induced-minor model of a forbidden pattern."
    )


def render_class_table(graph):
    rows = []
    for name in CLASSES:
        try:
            rows.append({'class': name, 'member': in_class(name, graph)})
        except OnePOError as e:
            rows.append({'class': name, 'member': None, 'note': str(e)})
    st.dataframe(pd.DataFrame(rows), hide_index=True, use_container_width=True)


def render_certificate(graph, recognizer_name: str):
    helpers = get_helpers()
    try:
        certificate = RECOGNIZERS[recognizer_name](graph)
    except PreconditionError as e:
        st.warning(f"{recognizer_name} does not apply: {e}. Try the 2-SAT recognizer.")
        return

    verified = certificate.verify(graph)
    col1, col2, col3 = st.columns(3)
    col1.metric("Verdict", certificate.verdict.value)
    col2.metric("Evidence", "orientation" if certificate.orientation is not None
                else (certificate.witness.pattern if certificate.witness else "2-SAT conflict"))
    col3.metric("Verified", "yes" if verified else "NO")
    st.caption(certificate.reason)

    positions = grid_positions(graph.n) if st.session_state.layout == 'grid' else None
    fig = helpers['charts'].create_graph_chart(
        graph, certificate.orientation, certificate.witness,
        title=f"{to_graph6(graph)}: {certificate.verdict.value}", positions=positions,
    )
    st.plotly_chart(fig, use_container_width=True)

    sequence = None
    try:
        sequence = build_sequence(graph) if graph.is_connected() else None
    except PreconditionError:
        pass
    if sequence is not None:
        with st.expander(f"Construction sequence ({len(sequence.steps)} steps from {sequence.base_kind})"):
            st.dataframe(pd.DataFrame([
                {'step': i, 'kind': s.kind.value, 'vertex': s.vertex, 'targets': list(s.targets)}
                for i, s in enumerate(sequence.steps)
            ]), hide_index=True)

    col1, col2, col3 = st.columns(3)
    with col1:
        st.download_button("Download certificate JSON", data=certificate_to_json(certificate, indent=2),
                           file_name="certificate.json", mime="application/json")
    with col2:
        try:
            dot = serialize(certificate, TextFormat.DOT, host=graph)
            st.download_button("Download DOT", data=dot, file_name="certificate.dot", mime="text/plain")
        except OnePOError:
            st.button("Download DOT", disabled=True, help="No drawable evidence")
    with col3:
        try:
            path = helpers['pdf'].generate_certificate_report(graph, certificate)
            st.download_button("Download PDF", data=path.read_bytes(), file_name=path.name,
                               mime="application/pdf")
        except Exception as e:
            st.button("Download PDF", disabled=True, help=f"PDF export unavailable: {e}")


def render_crosscheck_tab():
    st.markdown("### Crosscheck")
    st.markdown("Sweep recognizers against the oracles over every small connected graph.")
    col1, col2 = st.columns([1, 3])
    n_max = col1.slider("Max vertices", 1, config.LIMITS["builtin_enumeration_n"], 5)
    suites = col2.multiselect("Suites", list(SUITES), default=["k4mf-recognizer", "graph6"])
    if not st.button("Run crosscheck") or not suites:
        return

    with st.spinner(f"Checking connected graphs up to n={n_max}..."):
        try:
            summary, disagreements, checked, elapsed = run_crosscheck(n_max, tuple(suites))
        except OnePOError as e:
            st.error(f"Crosscheck failed: {e}")
            return

    st.success(f"{checked} graphs in {elapsed:.1f}s, {len(disagreements)} disagreements")
    st.plotly_chart(get_helpers()['charts'].create_crosscheck_chart(summary), use_container_width=True)
    st.dataframe(summary, hide_index=True, use_container_width=True)
    if not disagreements.empty:
        st.dataframe(disagreements, hide_index=True, use_container_width=True)
        st.download_button("Download disagreements CSV", data=disagreements.to_csv(index=False),
                           file_name=f"crosscheck_{datetime.now().strftime('%Y%m%d')}.csv", mime="text/csv")


def main():
    init_session_state()
    render_sidebar()

    st.title("1-Perfect Orientation Workbench")
    tab1, tab2 = st.tabs(["🔍 Recognize", "✅ Crosscheck"])

    with tab1:
        if st.session_state.graph6 is None:
            st.info("Load or generate a graph in the sidebar.")
        else:
            graph = parse(st.session_state.graph6, TextFormat.GRAPH6)
            st.markdown(f"**graph6** `{st.session_state.graph6}` · {graph.n} vertices · {graph.num_edges} edges")
            recognizer_name = st.selectbox("Recognizer", list(RECOGNIZERS))
            render_certificate(graph, recognizer_name)
            with st.expander("Graph classes"):
                render_class_table(graph)
            with st.expander("Edge list"):
                st.code(serialize(graph, TextFormat.EDGELIST))

    with tab2:
        render_crosscheck_tab()

    st.markdown("---")
    st.markdown(f"*{config.REPORT_TITLE}*")


if __name__ == "__main__":
    main()
