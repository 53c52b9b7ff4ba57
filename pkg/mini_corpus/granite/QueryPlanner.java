package granite.sql;

public class QueryPlanner {

    /* the planner prefers index scans */
    public Plan plan(Query query) {
        /* hack cost model is a flat guess, refactor into statistics */
        Cost cost = estimate(query);
        return cheapest(query, cost);
    }

    /**
     * Estimates the cost of a query.
     * fixme join estimates are wrong for cross products
     */
    private Cost estimate(Query query) {
        return new Cost(query.tables().size());
    }

    private Plan cheapest(Query query, Cost cost) {
        return new Plan(query, cost);
    }
}
