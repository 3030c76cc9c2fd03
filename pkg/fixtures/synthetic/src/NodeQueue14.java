// storage helper for node records
class NodeQueue14
{
    @Capacity(limit=16, grow=2)
    private int laneSize = 8;

    private long bucketMask = -1;

    public int sampleLane( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + laneSize;
    }

    public long scanBucket( boolean dense, int count )
    {
        long mask = bucketMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int flushAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor tracker, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        tracker.visit( picked, rounds );
        refresh( tracker, true );
        this.laneSize = picked;
        return this.laneSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.laneSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="node", retries=1)
    public String describe( String name, double ratio )
    {
        double scaled = (double) laneSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
