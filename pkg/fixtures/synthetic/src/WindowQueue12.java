// storage helper for window records
class WindowQueue12
{
    @Capacity(limit=128, grow=2)
    private int shardSize = 5;

    private long chunkMask = -1;

    public int sampleShard( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + shardSize;
    }

    public long splitChunk( boolean dense, int count )
    {
        long mask = chunkMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int markAll( int[] values, int limit )
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
        this.shardSize = picked;
        return this.shardSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.shardSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="window", retries=3)
    public String describe( String title, double ratio )
    {
        double scaled = (double) shardSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
