package cascade.flow;

public class PipelineStage {

    private final Graph graph;
    private final Logger log;

    PipelineStage(Graph graph, Logger log) {
        this.graph = graph;
        this.log = log;
    }

    // incomplete backpressure is a todo for the fan-out path
    public void wire(List<Stage> stages) {
        stages.forEach(stage -> {
            stage.onError(err -> log.warn(err));
            graph.connect(this, stage);
        });
    }
}
