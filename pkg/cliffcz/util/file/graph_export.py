import json


def node_name(orbit):
    return 'O{}'.format(orbit)


class GraphExportUtil:
    @staticmethod
    def to_dot(graph, atlas, name='cz_orbits'):
        """
        :param CzGraph graph: Graph labelled like atlas
        :param OrbitAtlas atlas: Layered atlas, layers become rank hints
        """
        lines = ['graph {} {{'.format(name), '  rankdir=TB;']
        for layer in range(atlas.max_layer() + 1):
            members = ' '.join('{};'.format(node_name(o)) for o in atlas.orbits_at(layer))
            lines.append('  {{ rank=same; {} }}'.format(members))
        for orbit in graph.nodes():
            lines.append('  {} [layer={}, size={}];'.format(node_name(orbit), atlas.layer(orbit), atlas.size(orbit)))
        for a, b, weight in graph.edges():
            lines.append('  {} -- {} [weight={}];'.format(node_name(a), node_name(b), weight))
        lines.append('}')
        return '\n'.join(lines) + '\n'

    @staticmethod
    def to_json(graph, atlas, labels=None):
        """
        :param dict labels: Orbit id to reference figure label, as returned by check_isomorphic
        """
        labels = labels or {}
        sizes = atlas.sizes()
        content = {
            'nodes': [{'id': o, 'layer': atlas.layer(o), 'size': sizes[o - 1],
                       'paper_label': node_name(labels[o]) if o in labels else None} for o in graph.nodes()],
            'edges': [{'a': a, 'b': b, 'weight': w} for a, b, w in graph.edges()],
        }
        return json.dumps(content, indent=2) + '\n'
